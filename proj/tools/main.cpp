#include "bellcert/cli.hpp"

int main(int argc, char** argv) { return bellcert::cli::run(argc, argv); }

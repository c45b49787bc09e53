#include "codim1/runner.hpp"

int main(int argc, char** argv) { return codim1::cli_main(argc, argv); }

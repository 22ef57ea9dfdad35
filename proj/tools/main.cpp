#include "orbicular/cli.hpp"

int main(int argc, char** argv) { return orbicular::cli_main(argc, argv); }

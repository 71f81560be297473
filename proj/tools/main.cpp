#include "pnrule/cli.hpp"

int main(int argc, char** argv) { return pnrule::cli_main(argc, argv); }

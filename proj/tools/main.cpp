#include "gmaj/cli.hpp"

int main(int argc, char** argv) { return gmaj::run_cli(argc, argv); }

#include "skeletal/cli.hpp"

int main(int argc, char** argv) { return skeletal::cli::run_main(argc, argv); }

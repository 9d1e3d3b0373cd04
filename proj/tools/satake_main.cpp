#include "satake/cli.hpp"

int main(int argc, char** argv) { return satake::cli::run(argc, argv); }

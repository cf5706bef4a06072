#include "cli.hpp"

int main(int argc, char** argv) { return herbidyn::cli::run(argc, argv); }

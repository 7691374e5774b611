#include "tmeasure/cli.hpp"

int main(int argc, char** argv) { return tmeasure::cli::main(argc, argv); }

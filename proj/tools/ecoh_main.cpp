#include "ecoh/cli.hpp"

int main(int argc, char** argv) { return ecoh::cli::run(argc, argv); }

#include "qmrc/cli.hpp"

int main(int argc, char** argv) { return qmrc::cli::run(argc, argv); }

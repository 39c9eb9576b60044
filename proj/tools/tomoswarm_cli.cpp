#include "commands.hpp"

int main(int argc, char** argv) { return tomoswarm::cli::run(argc, argv); }

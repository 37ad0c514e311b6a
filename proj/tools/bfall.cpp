#include "commands.hpp"

int main(int argc, char **argv) { return bfall::cli::run(argc, argv); }

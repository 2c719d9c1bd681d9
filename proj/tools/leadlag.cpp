#include "leadlag/cli.hpp"

int main(int argc, char** argv) { return leadlag::cli::run(argc, argv); }

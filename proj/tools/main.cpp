#include "demoivre/cli.hpp"

int main(int argc, char** argv) { return demoivre::cli::run(argc, argv); }

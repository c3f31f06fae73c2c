#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return teachkit::cli::run(argc, argv, std::cout, std::cerr); }

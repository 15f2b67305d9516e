#include <iostream>

#include "cli.hpp"

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return mtlab::cli::run(args, std::cout, std::cerr);
    } catch (std::exception const & e) {
        std::cerr << "mtlab: internal error: " << e.what() << "\n";
        return 70;
    }
}

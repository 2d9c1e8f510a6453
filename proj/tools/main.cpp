#include <vector>

#include "hbvm/cli.hpp"

int main(int argc, char** argv)
{
    return hbvm::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}

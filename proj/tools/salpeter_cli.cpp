#include <string>
#include <vector>

#include "salpeter/cli.hpp"

int main(int argc, char** argv) {
    return salpeter::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}

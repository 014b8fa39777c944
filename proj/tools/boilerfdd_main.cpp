#include <string>
#include <vector>

#include "boilerfdd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return boilerfdd::dispatch(args);
}

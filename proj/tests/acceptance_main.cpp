#include <iostream>

#include "darcais/verify.hpp"

int main() {
    const auto results = darcais::run_acceptance(std::cout);
    return darcais::count_failures(results);
}

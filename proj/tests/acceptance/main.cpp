#include <iostream>

#include "acceptance.hpp"

int main()
{
    return intdiff::acceptance::run_and_report(std::cout) == 0 ? 0 : 1;
}

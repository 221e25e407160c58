#include <iostream>
int main() { std::cerr << "acceptance: not implemented\n"; return 1; }

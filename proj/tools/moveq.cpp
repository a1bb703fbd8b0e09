#include <cstdio>
int main() { std::puts("moveq: under construction"); return 1; }

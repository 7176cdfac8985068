#include <iostream>

int main() {
  std::cerr << "tracelab: CLI not wired yet\n";
  return 2;
}

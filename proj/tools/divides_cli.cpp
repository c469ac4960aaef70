#include <cstdio>

int main() {
  std::puts("divide-tool: subcommands not wired up yet");
  return 2;
}

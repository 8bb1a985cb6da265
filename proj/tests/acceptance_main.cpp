// Placeholder during bring-up; the real acceptance suite lands last.
#include <cstdio>
int main() {
  std::puts("acceptance suite not yet wired");
  return 1;
}

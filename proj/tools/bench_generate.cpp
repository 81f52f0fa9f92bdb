// Benchmark: parallel closure generation against the serial reference, on a
// family of seeded random digraphs.  Verifies that both paths produce the
// same canonical element sequence.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "rclos/generate.hpp"

namespace {

rclos::Digraph random_digraph(int states, int letters, unsigned seed,
                              double density) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  std::string alphabet;
  for (int i = 0; i < letters; ++i) {
    alphabet.push_back(static_cast<char>('a' + i));
  }
  rclos::Digraph g(states, alphabet);
  for (char a : alphabet) {
    for (int p = 0; p < states; ++p) {
      for (int q = 0; q < states; ++q) {
        if (edge(rng)) {
          g.add_edge(p, a, q);
        }
      }
    }
  }
  return g;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_states = argc > 1 ? std::atoi(argv[1]) : 5;
  std::printf("%8s %8s %10s %12s %12s %9s %6s\n", "states", "letters",
              "elements", "serial_s", "parallel_s", "speedup", "equal");
  for (int states = 2; states <= max_states; ++states) {
    for (int letters = 2; letters <= 2; ++letters) {
      rclos::Digraph g =
          random_digraph(states, letters, 1000u * states + letters, 0.35);

      auto t0 = std::chrono::steady_clock::now();
      rclos::GenSemigroup serial = rclos::generate_serial(g);
      double serial_s = seconds_since(t0);

      rclos::GenOptions options;
      options.parallel = true;
      auto t1 = std::chrono::steady_clock::now();
      rclos::GenSemigroup parallel = rclos::generate(g, options);
      double parallel_s = seconds_since(t1);

      bool equal = serial.size() == parallel.size();
      for (std::size_t i = 0; equal && i < serial.size(); ++i) {
        equal = serial.elements()[i].triple == parallel.elements()[i].triple &&
                serial.elements()[i].witness == parallel.elements()[i].witness;
      }
      std::printf("%8d %8d %10zu %12.4f %12.4f %8.2fx %6s\n", states, letters,
                  serial.size(), serial_s, parallel_s,
                  parallel_s > 0 ? serial_s / parallel_s : 0.0,
                  equal ? "yes" : "NO");
      if (!equal) {
        return 1;
      }
    }
  }
  return 0;
}

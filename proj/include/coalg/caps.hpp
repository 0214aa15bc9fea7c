#pragma once

namespace coalg {

// Bounds on every brute-force surface. Each enumeration checks its cap up
// front, so a run either completes or fails fast with a cap error.
struct Caps {
  long long field_size = 1LL << 16;      // max field order p^n
  long long group_close = 10'000;        // max group closure size
  long long subgroup_enum = 2'000;       // max |G| for subgroup lattice work
  long long grouplike_enum = 1LL << 20;  // max q^dim vectors scanned
  long long brute_oracle = 1LL << 24;    // max matrices / structured triples materialized
  long long graph_search = 20'000'000;   // backtracking node budget
  int graph_unpruned = 14;               // max |V| when refinement finds no structure
};

}  // namespace coalg

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclecover/graphs.hpp"

namespace cyclecover {

// Result of one verification census.  `failures` holds one canonical line per
// failing instance; the census passes exactly when it is empty.  `seed` is
// meaningful (and serialized) only when sampling actually ran.  Wall time is
// informational and never serialized, so identical reruns stay byte-identical.
struct CensusReport {
  std::string theorem;
  std::string description;
  int nmax = 0;
  long long instances = 0;
  std::vector<std::string> failures;
  bool sampled = false;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  bool pass() const { return failures.empty(); }
};

// One poset whose incomparability-graph symmetric function is not e-positive.
struct PosetFinding {
  std::string poset;  // one-line serialization
  bool three_plus_one_free = false;
};

// Result of the e-positivity scan: failures are disagreements between the two
// coefficient routes; findings list every non-e-positive instance.
struct ScanReport {
  int n = 0;
  long long instances = 0;
  std::vector<std::string> failures;
  std::vector<PosetFinding> findings;
  double wall_seconds = 0.0;

  bool pass() const { return failures.empty(); }
};

const std::vector<std::string>& census_ids();
bool is_census_id(const std::string& id);

// Largest admissible --nmax / --n, from CYCLECOVER_NMAX_HARD (default 6).
int census_hard_cap();

// Runs the census for one theorem id up to nmax (exhaustively below the
// per-id cap, seeded samples beyond it).  Unknown ids are a parse error;
// nmax outside 1..census_hard_cap() is a domain error.
CensusReport run_census(const std::string& id, int nmax,
                        std::optional<std::uint64_t> seed = std::nullopt);

// Iterates every labeled poset on n vertices, compares the determinant-sum
// e-coefficients with the basis-conversion route, and records every
// non-e-positive instance together with its (3+1)-freeness flag.
ScanReport scan_posets(int n);

std::string census_report_to_json(const CensusReport& report);
std::string scan_report_to_json(const ScanReport& report);

// Instance spaces (exhaustive, canonically ordered).
std::vector<Digraph> all_digraphs(int n);
std::vector<Digraph> all_acyclic_digraphs(int n);
std::vector<Graph> all_graphs(int n);
std::vector<Poset> all_posets(int n);

// No induced subposet made of a 3-chain plus an element incomparable to it.
bool is_three_plus_one_free(const Poset& p);

// Seeded samplers (uniform over the respective instance space; acyclic and
// poset sampling use rejection / closure of an acyclic sample).
Digraph random_digraph(int n, std::mt19937_64& rng);
Digraph random_acyclic_digraph(int n, std::mt19937_64& rng);
Graph random_graph(int n, std::mt19937_64& rng);
Poset random_poset(int n, std::mt19937_64& rng);

}  // namespace cyclecover

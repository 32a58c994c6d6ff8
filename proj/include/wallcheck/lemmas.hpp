#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallcheck/embedding.hpp"
#include "wallcheck/generators.hpp"

namespace wallcheck {

enum class LemmaId {
  NoTwoLinkages,
  HittingRobust,
  B3CenterBottleneck,
  B3LayerPacking,
  NoB4,
  NoB4OverB3,
  NoB5OverB3,
  B2Bottleneck,
  NoB7,
  B6Packing,
  B7PackingWithCD,
  B8PackingWithB1,
  B9PackingWithB2,
  GStarExpansionLinkage,
};

std::vector<LemmaId> all_lemma_ids();
std::string lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(const std::string& name);

constexpr std::uint64_t kDefaultTrialSeed = 0x77a11c8ec7ull;

struct TrialPolicy {
  bool allow_sampling = true;      // fall back to sampling above the cap
  std::uint64_t exhaustive_cap = 1'000'000;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = kDefaultTrialSeed;
};

struct LemmaParams {
  int r = 2;        // wall size, fold, or deletion count depending on the lemma
  int n = 1;        // packing count for the packing lemmas
  TrialPolicy trial;
  std::uint64_t budget = 100'000'000;
  int workers = 1;
};

enum class Verdict { Verified, Refuted, BudgetExceeded };
std::string verdict_name(Verdict v);

struct LemmaReport {
  LemmaId id{};
  LemmaParams params;
  Verdict verdict = Verdict::BudgetExceeded;
  std::uint64_t nodes = 0;      // search steps across all sub-searches
  std::uint64_t trials = 0;     // deletion sets examined
  std::uint64_t witnesses = 0;  // enumerated objects or placed templates
  bool exhausted = false;       // universal part searched to exhaustion
  bool sampled = false;         // deletion universe was sampled, not exhausted
  bool vacuous = false;         // quantifier ranged over an empty set
  std::int64_t wall_ms = 0;
  std::vector<std::string> notes;

  // Re-checkable payloads. A refutation always carries one of these.
  std::optional<Linkage> witness_linkage;
  std::optional<std::pair<Linkage, Linkage>> witness_two_linkages;
  std::optional<Embedding> witness_embedding;
};

LemmaReport check(LemmaId id, const LemmaParams& params = {});

/// One report per lemma id at its canonical parameter point for the given
/// maximum wall size.
std::vector<LemmaReport> run_all(int max_r, const TrialPolicy& policy = {},
                                 int workers = 1,
                                 std::uint64_t budget = 100'000'000);

/// Deletion-trial plan: exhaustive enumeration of all k-subsets when their
/// count fits the cap, otherwise `samples` seeded draws. Exhaustive plans
/// enumerate exactly C(|edges|, k) sets.
struct TrialPlan {
  bool exhaustive = true;
  std::vector<std::vector<Edge>> sets;
};
TrialPlan plan_deletion_trials(const std::vector<Edge>& edges, int k,
                               const TrialPolicy& policy);

}  // namespace wallcheck

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carousel/carousel.hpp"
#include "carousel/gf2.hpp"
#include "carousel/graph.hpp"

namespace carousel {

struct MinOrder {
  std::int64_t q = 0;
  std::int64_t s = 0;
};

/// Smallest positive q with 2^(q+8r-1) >= 10(n+1)(q+8r+1)r for the even
/// flavor, or 2^(q+16r-1) >= 10(n+1)(q+16r+1)r for the odd flavor, decided
/// in exact integer arithmetic; s is q+8r+1 resp. q+16r+1.
MinOrder min_order(std::int64_t n, std::int64_t r, CarouselFlavor flavor);

enum class BlockSide { y, z };

/// Maximal monochromatic interval of an ordered vertex set; positions are
/// 1-based indices into that set, inclusive.
struct Block {
  std::int64_t start = 0;
  std::int64_t end = 0;
  BlockSide side = BlockSide::y;
  bool operator==(const Block&) const = default;
};

std::vector<Block> blocks(const Bipartition& p, const std::vector<VertexId>& ordered_set);

/// ceil(|S ∩ Y| / r); zero exactly when S avoids Y.
std::int64_t label_index(const std::vector<VertexId>& members, const Bipartition& p,
                         std::int64_t r);

/// Label of a carousel part, using contiguous-range popcounts.
std::int64_t part_label(const CarouselSpec& spec, const Bipartition& p, PartRef part,
                        std::int64_t r);

/// Pattern of a rank witness; `raw` carries no structural constraint and
/// is checked by rank recomputation alone.
enum class WitnessPattern { diagonal, antidiagonal, triangular, near_triangular, raw };

const char* to_string(WitnessPattern pattern);
std::optional<WitnessPattern> witness_pattern_from_string(std::string_view name);

/// A certified submatrix of the cut matrix proving a rank lower bound.
/// Rows lie on one side of the partition and columns on the other, so the
/// claimed bound transfers to the full cut rank.
struct RankWitness {
  std::vector<VertexId> row_vertices;
  std::vector<VertexId> col_vertices;
  WitnessPattern pattern = WitnessPattern::raw;
  std::int64_t claimed_rank_lb = 0;
};

/// Builds a witness and re-verifies it against the live oracle (pattern
/// entries plus rank); throws std::logic_error when the check fails.
RankWitness make_witness(const Graph& g, std::vector<VertexId> rows,
                         std::vector<VertexId> cols, WitnessPattern pattern,
                         std::int64_t claimed_rank_lb);

bool verify_witness(const Graph& g, const RankWitness& w);

std::string write_witness_text(const RankWitness& w);
RankWitness parse_witness_text(const std::string& text);

/// When X_1 has at least 8r blocks, replays the crossing argument: picks
/// representatives from the first 8r blocks, reflects them into X_2, takes
/// the majority side there and returns a near-triangular 2r x 2r witness of
/// rank at least r.  Returns nullopt when X_1 has fewer than 8r blocks.
std::optional<RankWitness> block_witness(const Graph& g, const Bipartition& p,
                                         std::int64_t r);

struct PropagationResult {
  std::int64_t source_label = 0;
  std::int64_t target_label = 0;
  PartRef source;
  PartRef target;
  bool labels_compatible = true;
  /// Present exactly when the labels are incompatible and the structured
  /// (r+1)-pair extraction succeeded.
  std::optional<RankWitness> witness;
};

/// Label propagation check across gap i: source part (i, j), target part
/// (i+1 cyclically, j) for regular gaps or (1, j+1) for the expanding and
/// skew gap.  Barredness of source and target follows the triple's
/// parallel/cross status; the overload without source_barred picks the
/// source by the set's top/bottom role (even flavor) or unbarred (odd).
PropagationResult propagation_check(const Graph& g, const Bipartition& p,
                                    std::int64_t r, std::int64_t gap_index,
                                    std::int64_t part_index, bool source_barred);
PropagationResult propagation_check(const Graph& g, const Bipartition& p,
                                    std::int64_t r, std::int64_t gap_index,
                                    std::int64_t part_index);

struct UniformWindowHit {
  std::int64_t t = 0;
  BlockSide side = BlockSide::y;
};

/// Scans X_{1,t} for t in [q, q+8r-1] (even flavor) or X_{1,t} ∪ X_{1,t+1}
/// for t in [q, q+16r-2] (odd flavor) and reports the first window set that
/// lies entirely on one side.  When X_1 has fewer than 8r blocks and the
/// scan window is wide enough, such a set exists.
std::optional<UniformWindowHit> uniform_label_window(const Graph& g,
                                                     const Bipartition& p,
                                                     std::int64_t r, std::int64_t q);

enum class CertifyMethod { blocks, propagation, probe };
const char* to_string(CertifyMethod method);

struct PartitionCertificate {
  bool balanced = true;
  bool certified = false;
  std::optional<CertifyMethod> method;
  std::optional<RankWitness> witness;
};

/// Tries, in order: the block witness, propagation checks over every gap
/// and part (both bar variants), and bounded random submatrix probing.
/// Unbalanced partitions are rejected without certification.  Never claims
/// the rank is below r.
PartitionCertificate certify_partition(const Graph& g, const Bipartition& p,
                                       std::int64_t r, std::uint64_t probe_seed = 0,
                                       int probe_rounds = 64);

struct TrialReport {
  std::int64_t index = 0;
  VertexId y_size = 0;
  bool certified = false;
  std::optional<CertifyMethod> method;
  std::optional<RankWitness> witness;
};

struct SampledReport {
  std::int64_t r = 0;
  std::int64_t trials = 0;
  std::vector<TrialReport> entries;
  std::int64_t certified_count() const;
};

/// Draws `trials` seeded balanced bipartitions and certifies each one.
/// Entries are ordered by trial index whatever the thread count.
SampledReport sampled_certificate(const Graph& g, std::int64_t r, std::int64_t trials,
                                  std::uint64_t seed, int threads = 1);

/// The seeded balanced bipartition used by trial `index`.
Bipartition sampled_partition(const Graph& g, std::uint64_t seed, std::int64_t index);

std::string write_report_text(const SampledReport& report);

}  // namespace carousel

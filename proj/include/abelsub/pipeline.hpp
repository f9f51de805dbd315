#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelsub/jordan.hpp"
#include "abelsub/matalg.hpp"
#include "abelsub/oml.hpp"
#include "abelsub/poset.hpp"
#include "abelsub/reconstruct.hpp"

namespace abelsub {

class PipelineError : public Error {
public:
    using Error::Error;
};

// An order isomorphism f between the fragment posets of two algebras.
struct TheoremInstance {
    FinDimAlgebra m, n;
    AbelianFragment fm, fn;
    OrderIso f;

    // Throws PipelineError UnknownPartition / TrivialNotFixed and PosetError
    // when the pairs do not form an order isomorphism.
    static TheoremInstance make(AbelianFragment fm, AbelianFragment fn,
                                const std::vector<std::pair<std::string, std::string>>& fmap);
    // f := the map induced by a Jordan map g on the fragment.
    static TheoremInstance forward(const JordanMap& g, const AbelianFragment& fm);

    const PartitionOfUnity& image(std::size_t s) const { return fn.partitions()[f(s)].partition; }
};

// Finite ortholattice of projections generated by `gens` under join, meet and
// complement, with elements named 0, 1 and p1, p2, ... in matrix order.
// Throws PipelineError FragmentTooLarge past max_size elements.
struct ProjectionOml {
    OmlPtr oml;
    std::vector<AlgElement> elements;  // index-aligned with oml

    std::size_t index_of(const AlgElement& p) const;
};
ProjectionOml projection_oml(const FinDimAlgebra& a, const std::vector<AlgElement>& gens, std::size_t max_size = 512);

struct PipelineOptions {
    bool diagnostic = false;
    std::size_t max_size = 512;
};

struct Candidate {
    OmlIso k;
    std::optional<JordanMap> map;
    std::string error;  // why no Jordan map exists for this k
};

struct PipelineResult {
    std::vector<std::string> log;
    std::vector<std::string> warnings;
    std::optional<OrderIso> g;
    ProjectionOml lm, ln;
    BsubPoset bm, bn;
    std::vector<std::size_t> fragment_m, fragment_n;  // BSub index per fragment partition
    std::optional<OrderIso> h;
    std::optional<BsubIso> j;
    std::vector<Candidate> candidates;
    std::optional<JordanMap> F;
};

// Runs every step; an ambiguous or failed k step leaves F empty and, in
// diagnostic mode, fills a Jordan map per candidate.
PipelineResult run_pipeline_traced(const TheoremInstance& t, const PipelineOptions& opt = {});
// Throws PipelineError AmbiguousReconstruction when k is not unique.
JordanMap run_pipeline(const TheoremInstance& t, const PipelineOptions& opt = {});

Report verify_claims(const TheoremInstance& t, const JordanMap& F);
Report verify_uniqueness(const TheoremInstance& t, const JordanMap& F, const PipelineOptions& opt = {});

// Instance files:
//
//   left  m.yaml          algebra file for the source side
//   right n.yaml
//   coarsen               optional: close both fragments under merging atoms
//   fmap d e              partition d of the left goes to e of the right
//
// With coarsen, each fmap line also sends every merge of d's atoms to the
// same merge of e's atoms (atoms in file order). Paths are relative to the
// instance file.
struct InstanceFile {
    std::string left, right;
    bool coarsen = false;
    std::vector<std::pair<std::string, std::string>> fmap;
};

InstanceFile parse_instance(std::string_view text, std::string_view source = "<input>");
std::string write_instance(const InstanceFile& f);
// Reads the instance and both algebra files. ParseError on any malformed or
// missing file.
TheoremInstance load_instance(const std::string& path);
TheoremInstance build_instance(const InstanceFile& f, const AbelianFragment& fm, const AbelianFragment& fn);

}  // namespace abelsub

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelsub/algebra.hpp"
#include "abelsub/linalg.hpp"
#include "abelsub/matalg.hpp"
#include "abelsub/poset.hpp"

namespace abelsub {

class JordanError : public Error {
public:
    using Error::Error;
};

// Finite map between projections, closed under complements.
class ProjMapFragment {
public:
    // Throws JordanError NotProjection, NotInjective, NotOrthoPreserving,
    // NotOrderPreserving, NotAdditive.
    static ProjMapFragment make(FinDimAlgebra source, FinDimAlgebra target,
                                std::vector<std::pair<AlgElement, AlgElement>> pairs);

    const FinDimAlgebra& source() const { return source_; }
    const FinDimAlgebra& target() const { return target_; }
    // Sorted by source projection.
    const std::vector<std::pair<AlgElement, AlgElement>>& pairs() const { return pairs_; }
    std::optional<AlgElement> image(const AlgElement& p) const;

private:
    FinDimAlgebra source_, target_;
    std::vector<std::pair<AlgElement, AlgElement>> pairs_;
};

// Linear map known through images of generators; defined on their span.
class JordanMap {
public:
    JordanMap() = default;
    // Throws JordanError SpanInconsistent when a linear relation among the
    // generators is not respected by the images.
    static JordanMap make(FinDimAlgebra source, FinDimAlgebra target, std::vector<AlgElement> generators,
                          std::vector<AlgElement> images);
    // Images of all matrix units of the source.
    static JordanMap full(const FinDimAlgebra& source, const FinDimAlgebra& target,
                          const std::function<AlgElement(const AlgElement&)>& f);
    static JordanMap identity(const FinDimAlgebra& a);
    static JordanMap transpose(const FinDimAlgebra& a);
    // x -> U x U*.
    static JordanMap conjugation(const AlgElement& u);

    const FinDimAlgebra& source() const { return source_; }
    const FinDimAlgebra& target() const { return target_; }
    const std::vector<AlgElement>& generators() const { return gens_; }
    const std::vector<AlgElement>& images() const { return images_; }
    const Span& domain() const { return span_; }

    bool covers(const AlgElement& x) const;
    // Throws JordanError OutsideSpan.
    AlgElement operator()(const AlgElement& x) const;
    // this after first, on first's domain.
    JordanMap after(const JordanMap& first) const;
    // Both maps cover every x and take equal values there.
    bool agrees_on(const JordanMap& other, const std::vector<AlgElement>& xs) const;
    // Equal domains and equal values on a basis of them.
    friend bool operator==(const JordanMap& a, const JordanMap& b);

private:
    FinDimAlgebra source_, target_;
    std::vector<AlgElement> gens_, images_;
    Span span_;
};

// Extends psi linearly through the spectral forms of the inputs and of the
// domain projections. Throws JordanError UncoveredProjection, SpanInconsistent,
// NotStarPreserving.
JordanMap spectral_extend(const ProjMapFragment& psi, const std::vector<SpectralElement>& inputs);

struct Finding {
    std::string property;
    bool pass = true;
    std::string witness;
};

struct Report {
    std::vector<Finding> findings;
    std::size_t skipped = 0;  // products that leave the domain span

    bool ok() const;
    bool passed(const std::string& property) const;
    std::string to_text() const;
};

Report verify_jordan(const JordanMap& phi, const std::vector<std::pair<AlgElement, AlgElement>>& samples);

enum class Multiplicativity { iso, anti };

struct JordanDecomposition {
    AlgElement p1;  // sum of central units of summands where phi is multiplicative
    AlgElement p2;
    std::vector<Multiplicativity> labels;
};

// Throws JordanError NeitherIsoNorAnti, or OutsideSpan when some matrix unit
// is not in the domain.
JordanDecomposition decompose_jordan(const JordanMap& phi);

// Fragment of the target whose partitions are the atomwise images, names kept.
// Throws JordanError ImageNotPartition.
AbelianFragment image_fragment(const JordanMap& g, const AbelianFragment& f);
// Order isomorphism fragment_poset(f) -> fragment_poset(target) sending each
// partition to the partition of its image. Throws ImageNotPartition,
// ImageNotInFragment.
OrderIso induced_subalgebra_map(const JordanMap& g, const AbelianFragment& f, const AbelianFragment& target);

// Lines "proj <name> <element> -> <element>" with elements written as
// "[[a,b],[c,d]] (+) [[e]]", preceded by "source" and "target" dimension lines.
std::string write_map(const JordanMap& m);
JordanMap parse_map(std::string_view text, std::string_view source = "<input>");
AlgElement parse_element_text(const FinDimAlgebra& a, std::string_view text);

}  // namespace abelsub

#ifndef QREP_DECOMPOSE_HPP
#define QREP_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qrep/catalogue.hpp"

namespace qrep {

struct DecompPart {
    Descriptor desc;
    int count = 1;
};

/// Canonically sorted inventory of indecomposable summands. When the
/// witness is kept, applying it to the input reproduces the direct sum of
/// generate() forms of the parts, in order, exactly.
struct Decomposition {
    std::vector<DecompPart> parts;
    DimVector total;
    bool exact = true;  // false when type-0 parts are invariant-factor level (over Q)
    std::optional<PresWitness> witness;

    std::vector<Descriptor> expanded() const;
    std::string to_string() const;
};

bool decomposition_eq(const Decomposition& a, const Decomposition& b);

/// Direct sum of the generate() forms, in the given order.
Presentation assemble(const std::vector<Descriptor>& descs, const FieldSpec& f);

/// Splits off all vertex simples (zero rows of the horizontal stripes, zero
/// columns of the vertical ones, after reduction exposes them).
struct PruneResult {
    Presentation core;
    std::vector<Descriptor> simples;  // sorted
};
PruneResult prune_trivial(const Presentation& v);

/// One reduction step: the first stripe splits as r added units over the
/// image of the gamma block; coupling[j] is the second-stripe row hosting
/// added column j, or -1 when the column splits off.
struct ReductionStep {
    int r = 0;
    std::vector<int> coupling;
    SymmetryElem sigma;  // normalization applied by the caller, identity here
};

/// Requires rank(G) < d1 after pruning; returns the reduced presentation
/// (first and third stripes shrink by r) together with the step data.
std::pair<Presentation, ReductionStep> prop1_reduce(const Presentation& v);

Decomposition decompose(const Presentation& v, bool with_witness = true);

bool is_isomorphic(const Presentation& v, const Presentation& w);

enum class OracleVerdict { yes, no, unknown };

/// Definition-level test: enumerates the full endomorphism algebra (at most
/// `budget` elements) and looks for an idempotent other than 0 and the
/// identity. Independent of the structure theory. The zero representation
/// has no nontrivial idempotent and reports yes.
OracleVerdict indecomposable_oracle(const Presentation& v, long long budget);

}  // namespace qrep

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ara/groebner.hpp"
#include "ara/witness.hpp"

namespace ara {

enum class Verdict { certified, refuted, inconclusive };

std::string verdict_str(Verdict v);

struct ElementInclusion {
    std::size_t index = 0;
    bool ok = false;
    std::string offending_term; // empty when ok
};

struct RadicalCertificate {
    Monomial generator;
    bool member = false;
    std::optional<std::uint64_t> power;
    bool cap_exceeded = false;
    std::size_t slack_basis_size = 0;
};

struct AraCertificate {
    std::size_t lower = 0;        // max height of a minimal prime
    std::size_t upper = 0;        // witness size
    bool exact = false;           // bounds met and the witness verified
    std::size_t ideal_height = 0; // height of the ideal itself
    bool unmixed = false;
    bool sci = false;             // exact, ara equals height, unmixed
};

struct VerifyOptions {
    FieldSpec field = FieldSpec::rationals();
    TermOrder order = TermOrder::degrevlex();
    std::optional<std::uint64_t> power_cap; // request explicit exponents
    unsigned workers = 0;                   // 0: use ARA_WORKERS, default 1
    // For prime fields, also run over Q and flag verdict changes.
    bool compare_with_rationals = true;
};

struct VerificationReport {
    Verdict verdict = Verdict::inconclusive;
    FieldSpec field;
    TermOrder order;
    bool inclusion_ok = false;
    std::vector<ElementInclusion> inclusions;
    bool radical_ok = false;
    std::vector<RadicalCertificate> radicals;
    std::optional<AraCertificate> ara;
    std::optional<bool> characteristic_dependent;
    double elapsed_ms = 0.0; // informational; excluded from canonical output

    std::string failure_summary() const;
};

// Decides sqrt(J) = I for a witness J of a squarefree monomial ideal I.
// Direction J in I is a per-term monomial membership check; direction
// I in sqrt(J) runs one Rabinowitsch test per minimal generator.
VerificationReport verify_up_to_radical(const WitnessSet& witness,
                                        const VerifyOptions& options = {});

// verify_up_to_radical plus the Krull bounds: lower = max minimal-prime
// height of the target's complex, upper = witness size.  Equal bounds on a
// certified witness pin ara exactly; unequal bounds leave the verdict open.
VerificationReport certify_ara(const WitnessSet& witness, const VerifyOptions& options = {});

// 0 certified, 1 refuted, 2 inconclusive.
int exit_code(const VerificationReport& report);

} // namespace ara

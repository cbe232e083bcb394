#pragma once

#include "cpsurgery/kerj.hpp"
#include "cpsurgery/lattice.hpp"
#include "cpsurgery/obstruction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpsurgery {

struct ForgetfulMatrix {
    int n = 0;
    int l = 0;
    std::vector<std::string> columns;  // "y", "m1", ...
    std::vector<std::string> rows;     // splitting invariants
    IntMatrix a_prime;
    IntMatrix p;
    IntMatrix a;
    // index2 mode for odd n + l: alternative (p, a) pairs after the identity
    std::vector<std::pair<IntMatrix, IntMatrix>> alternatives;
};

ForgetfulMatrix matrix_bundle(int n, int l, RootsMode mode = RootsMode::identity,
                              const GeneratorOptions& opts = {});

struct Congruence {
    RatVector coeffs;  // over sigma_0 .. sigma_{t-1}
    Integer modulus;
    std::string label;  // highest invariant involved
};

struct CongruenceSystem {
    int n = 0;
    int l = 0;
    int eps = 0;  // invariant m is sigma-bar_{2m+eps, 2l}
    std::vector<std::string> invariants;
    std::vector<Congruence> rows;     // cut out the column span of A'
    std::optional<Congruence> roots;  // n + l even: restricts further to the span of A = A'P

    // rows followed by the roots congruence when present
    std::vector<Congruence> all_rows() const;

    // image of A'
    bool holds(const IntVector& values, int* failed_row = nullptr) const;
    // image of A; failed_row counts the roots congruence as the last row
    bool holds_all(const IntVector& values, int* failed_row = nullptr) const;
};

CongruenceSystem congruences(int n, int l, const GeneratorOptions& opts = {});
CongruenceSystem congruences_of(const ForgetfulMatrix& fm, const ObstructionForm& top);

enum class Verdict { sufficient_pass, smoothable_necessary_pass, fail };
std::string to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::fail;
    int failed_row = 0;  // 1-based, set when verdict is fail
};

CheckResult check_invariants(const IntVector& values, int n, int l, bool divisible_by_two);

}  // namespace cpsurgery

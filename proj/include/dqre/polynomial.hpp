#pragma once

#include "dqre/pauli.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dqre {

// One monomial c * Px^ex * Py^ey * Pz^ez * p^ep.
struct PolyTerm {
    double coeff = 0.0;
    int ex = 0;
    int ey = 0;
    int ez = 0;
    int ep = 0;

    int input_order() const { return ex + ey + ez; }

    friend bool same_monomial(const PolyTerm& a, const PolyTerm& b) {
        return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez && a.ep == b.ep;
    }
};

// Multivariate polynomial in (Px, Py, Pz, p), kept in canonical order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<PolyTerm> terms) : terms_(terms) { canonicalize(); }

    void add_term(double coeff, int ex, int ey, int ez, int ep = 0);
    double eval(const PauliErrorRates& rates, double p) const;

    const std::vector<PolyTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Terms with ep == 0, i.e. the input-Bell-error part of the model.
    std::vector<PolyTerm> input_terms(int max_order = -1) const;

    std::string to_string() const;

private:
    void canonicalize(); // merge duplicates, drop zeros, sort

    std::vector<PolyTerm> terms_;
};

// Exact term-by-term equality (after canonicalization) with a coefficient
// tolerance for values produced by arithmetic rather than literals.
bool terms_equal(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b,
                 double coeff_tol = 1e-12);

// True if every term of `sub` appears in `super` with matching coefficient.
bool terms_subset(const std::vector<PolyTerm>& sub, const std::vector<PolyTerm>& super,
                  double coeff_tol = 1e-12);

} // namespace dqre

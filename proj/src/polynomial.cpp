#include "dqre/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dqre {

namespace {

bool term_order(const PolyTerm& a, const PolyTerm& b) {
    const auto key = [](const PolyTerm& t) {
        return std::array<int, 5>{t.input_order() + t.ep, t.ex, t.ey, t.ez, t.ep};
    };
    return key(a) < key(b);
}

} // namespace

void Polynomial::add_term(double coeff, int ex, int ey, int ez, int ep) {
    terms_.push_back({coeff, ex, ey, ez, ep});
    canonicalize();
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_order);
    std::vector<PolyTerm> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && same_monomial(merged.back(), t)) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const PolyTerm& t) { return t.coeff == 0.0; });
    terms_ = std::move(merged);
}

double Polynomial::eval(const PauliErrorRates& rates, double p) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (int i = 0; i < t.ex; ++i) v *= rates.x;
        for (int i = 0; i < t.ey; ++i) v *= rates.y;
        for (int i = 0; i < t.ez; ++i) v *= rates.z;
        for (int i = 0; i < t.ep; ++i) v *= p;
        sum += v;
    }
    return sum;
}

std::vector<PolyTerm> Polynomial::input_terms(int max_order) const {
    std::vector<PolyTerm> out;
    for (const auto& t : terms_) {
        if (t.ep != 0)
            continue;
        if (max_order >= 0 && t.input_order() > max_order)
            continue;
        out.push_back(t);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << t.coeff;
        const auto var = [&](const char* name, int e) {
            if (e == 1)
                os << "*" << name;
            else if (e > 1)
                os << "*" << name << "^" << e;
        };
        var("Px", t.ex);
        var("Py", t.ey);
        var("Pz", t.ez);
        var("p", t.ep);
    }
    return os.str();
}

bool terms_equal(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b,
                 double coeff_tol) {
    if (a.size() != b.size())
        return false;
    auto sa = a;
    auto sb = b;
    std::sort(sa.begin(), sa.end(), term_order);
    std::sort(sb.begin(), sb.end(), term_order);
    for (size_t i = 0; i < sa.size(); ++i) {
        if (!same_monomial(sa[i], sb[i]))
            return false;
        if (std::abs(sa[i].coeff - sb[i].coeff) > coeff_tol)
            return false;
    }
    return true;
}

bool terms_subset(const std::vector<PolyTerm>& sub, const std::vector<PolyTerm>& super,
                  double coeff_tol) {
    for (const auto& t : sub) {
        bool found = false;
        for (const auto& u : super) {
            if (same_monomial(t, u)) {
                found = std::abs(t.coeff - u.coeff) <= coeff_tol;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace dqre

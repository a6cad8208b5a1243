#pragma once

/*
 * Linear forms and validated arrangements.
 *
 * An Arrangement is an ordered list of nonzero, pairwise non-proportional
 * linear forms in dim variables. The order matters: it is the linear order
 * used by the broken-circuit machinery.
 */

#include "recipalg/errors.hpp"
#include "recipalg/rational.hpp"

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace recipalg {

struct LinearForm {
    std::vector<Rational> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

    bool isZero() const {
        for (const auto& c : coeffs)
            if (c != 0)
                return false;
        return true;
    }

    // alpha(v) for a point v given in the dual coordinates.
    Rational evaluate(const std::vector<Rational>& v) const {
        Rational sum(0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            sum += coeffs[i] * v[i];
        return sum;
    }

    // Scaled so the first nonzero coefficient is 1; proportional forms share
    // this key and only this key.
    std::vector<Rational> normalizedKey() const {
        std::vector<Rational> key = coeffs;
        for (const auto& c : key) {
            if (c != 0) {
                const Rational inv = Rational(1) / c;
                for (auto& k : key)
                    k *= inv;
                break;
            }
        }
        return key;
    }

    bool operator==(const LinearForm& other) const = default;
};

// "x1 - x2", "1/2 x1 + x3", ... for reports.
inline std::string formToString(const LinearForm& form) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
        const Rational& c = form.coeffs[i];
        if (c == 0)
            continue;
        if (first) {
            if (c == -1)
                out << "-";
            else if (c != 1)
                out << toString(c) << " ";
        } else {
            out << (c > 0 ? " + " : " - ");
            const Rational a = abs(c);
            if (a != 1)
                out << toString(a) << " ";
        }
        out << "x" << (i + 1);
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

class Arrangement {
public:
    Arrangement(int dim, std::vector<LinearForm> forms, std::vector<std::string> names = {})
        : dim_(dim), forms_(std::move(forms)), names_(std::move(names)) {
        if (dim_ < 1)
            throw std::invalid_argument("ambient dimension must be at least 1");
        if (!names_.empty() && names_.size() != forms_.size())
            throw std::invalid_argument("name count does not match form count");
        std::map<std::vector<Rational>, int> seen;
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            if (forms_[i].coeffs.size() != static_cast<std::size_t>(dim_))
                throw std::invalid_argument("form " + std::to_string(i + 1) +
                                            " has wrong coefficient count");
            if (forms_[i].isZero())
                throw ZeroFormError(static_cast<int>(i));
            auto [it, inserted] = seen.emplace(forms_[i].normalizedKey(), static_cast<int>(i));
            if (!inserted)
                throw ProportionalFormsError(it->second, static_cast<int>(i));
        }
    }

    int dim() const { return dim_; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& form(std::size_t i) const { return forms_.at(i); }

    std::string nameOf(std::size_t i) const {
        if (i < names_.size() && !names_[i].empty())
            return names_[i];
        return formToString(forms_.at(i));
    }

    // order[k] is the 0-based original index of the new k-th form; order must
    // be a permutation of 0..size-1.
    Arrangement permuted(const std::vector<int>& order) const {
        if (order.size() != forms_.size())
            throw std::invalid_argument("permutation length does not match form count");
        std::vector<bool> used(forms_.size(), false);
        std::vector<LinearForm> newForms;
        std::vector<std::string> newNames;
        newForms.reserve(order.size());
        for (int idx : order) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= forms_.size() || used[idx])
                throw std::invalid_argument("not a permutation of the form indices");
            used[idx] = true;
            newForms.push_back(forms_[idx]);
            if (!names_.empty())
                newNames.push_back(names_[idx]);
        }
        return Arrangement(dim_, std::move(newForms), std::move(newNames));
    }

    bool operator==(const Arrangement& other) const {
        return dim_ == other.dim_ && forms_ == other.forms_;
    }

private:
    int dim_;
    std::vector<LinearForm> forms_;
    std::vector<std::string> names_;
};

} // namespace recipalg

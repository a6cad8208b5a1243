#pragma once

/*
 * Built-in arrangement families: braid, boolean (coordinate), and a
 * deterministic generic family on the moment curve. The textual syntax
 * "braid:3" / "boolean:2" / "generic:5,2" is shared with the CLI so goldens
 * need no data files.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace recipalg {

// All differences x_i - x_j, i < j, ordered by j then by i descending, so the
// order for dim 3 is x1-x2, x2-x3, x1-x3.
inline Arrangement braidArrangement(int dim) {
    if (dim < 1)
        throw std::invalid_argument("braid family needs dim >= 1");
    std::vector<LinearForm> forms;
    std::vector<std::string> names;
    for (int j = 2; j <= dim; ++j) {
        for (int i = j - 1; i >= 1; --i) {
            std::vector<Rational> c(dim, Rational(0));
            c[i - 1] = 1;
            c[j - 1] = -1;
            forms.emplace_back(std::move(c));
            names.push_back("x" + std::to_string(i) + "-x" + std::to_string(j));
        }
    }
    return Arrangement(dim, std::move(forms), std::move(names));
}

inline Arrangement booleanArrangement(int dim) {
    if (dim < 1)
        throw std::invalid_argument("boolean family needs dim >= 1");
    std::vector<LinearForm> forms;
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i) {
        std::vector<Rational> c(dim, Rational(0));
        c[i - 1] = 1;
        forms.emplace_back(std::move(c));
        names.push_back("x" + std::to_string(i));
    }
    return Arrangement(dim, std::move(forms), std::move(names));
}

// Moment-curve forms alpha_i = sum_j i^(j-1) x_j for i = 1..n: every dim of
// them are independent by the Vandermonde determinant.
inline Arrangement genericArrangement(int n, int dim) {
    if (dim < 1)
        throw std::invalid_argument("generic family needs dim >= 1");
    if (n < dim)
        throw NotGenericError(n, dim);
    std::vector<LinearForm> forms;
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> c(dim);
        BigInt power = 1;
        for (int j = 0; j < dim; ++j) {
            c[j] = Rational(power);
            power *= i;
        }
        forms.emplace_back(std::move(c));
    }
    return Arrangement(dim, std::move(forms));
}

// "braid:L" | "boolean:L" | "generic:N,L"
inline Arrangement builtinArrangement(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("builtin spec must look like name:params");
    const std::string_view name = spec.substr(0, colon);
    const std::string params(spec.substr(colon + 1));

    auto parseInt = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size())
                throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad builtin parameter '" + s + "'");
        }
    };

    if (name == "braid")
        return braidArrangement(parseInt(params));
    if (name == "boolean")
        return booleanArrangement(parseInt(params));
    if (name == "generic") {
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("generic spec must look like generic:n,dim");
        return genericArrangement(parseInt(params.substr(0, comma)),
                                  parseInt(params.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown builtin family '" + std::string(name) + "'");
}

} // namespace recipalg

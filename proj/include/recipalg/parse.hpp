#pragma once

/*
 * Text format for arrangements.
 *
 * Lines; '#' starts a comment running to end of line. The first non-comment
 * line is the ambient dimension, each following non-comment line gives one
 * form as whitespace-separated rationals ("a/b" or integer). Semantic
 * validation (nonzero, non-proportional) is the Arrangement constructor's.
 */

#include "recipalg/arrangement.hpp"
#include "recipalg/errors.hpp"
#include "recipalg/rational.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace recipalg {

inline Arrangement parseArrangementFile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool haveDim = false;
    int dim = 0;
    std::vector<LinearForm> forms;

    while (std::getline(in, line)) {
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> fields;
        for (std::string tok; tokens >> tok;)
            fields.push_back(tok);
        if (fields.empty())
            continue;

        if (!haveDim) {
            if (fields.size() != 1)
                throw ParseError(lineNo, "expected a single integer dimension");
            try {
                std::size_t pos = 0;
                dim = std::stoi(fields[0], &pos);
                if (pos != fields[0].size())
                    throw std::invalid_argument(fields[0]);
            } catch (const std::exception&) {
                throw ParseError(lineNo, "malformed dimension '" + fields[0] + "'");
            }
            haveDim = true;
            continue;
        }

        if (fields.size() != static_cast<std::size_t>(dim))
            throw ParseError(lineNo, "expected " + std::to_string(dim) + " coefficients, got " +
                                         std::to_string(fields.size()));
        std::vector<Rational> coeffs;
        coeffs.reserve(fields.size());
        for (const std::string& f : fields) {
            try {
                coeffs.push_back(parseRational(f));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineNo, e.what());
            }
        }
        forms.emplace_back(std::move(coeffs));
    }

    if (!haveDim)
        throw ParseError(lineNo, "empty file: no dimension line");
    return Arrangement(dim, std::move(forms));
}

// Inverse of parseArrangementFile up to comments and whitespace.
inline std::string serializeArrangement(const Arrangement& arr) {
    std::ostringstream out;
    out << arr.dim() << "\n";
    for (const LinearForm& form : arr.forms()) {
        for (std::size_t j = 0; j < form.coeffs.size(); ++j)
            out << (j ? " " : "") << toString(form.coeffs[j]);
        out << "\n";
    }
    return out.str();
}

} // namespace recipalg

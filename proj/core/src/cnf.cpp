#include "pull/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace pull {

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool ok = false;
        for (const Literal& lit : clause) {
            bool v = assignment[static_cast<size_t>(lit.var - 1)];
            if (v == lit.positive) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<bool>> CnfFormula::all_satisfying_assignments() const {
    if (num_vars > 20) throw std::invalid_argument("truth table limited to 20 variables");
    std::vector<std::vector<bool>> out;
    for (uint32_t bits = 0; bits < (1u << num_vars); ++bits) {
        std::vector<bool> a(static_cast<size_t>(num_vars));
        for (int i = 0; i < num_vars; ++i) a[static_cast<size_t>(i)] = (bits >> i) & 1;
        if (satisfied_by(a)) out.push_back(std::move(a));
    }
    return out;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    int declared_clauses = -1;
    std::vector<Literal> current;
    bool saw_header = false;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> f.num_vars >> declared_clauses;
            if (fmt != "cnf" || f.num_vars < 0 || declared_clauses < 0)
                throw ParseError("bad DIMACS header");
            saw_header = true;
            continue;
        }
        if (!saw_header) throw ParseError("missing 'p cnf' header");
        long lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) throw ParseError("empty clause");
                std::sort(current.begin(), current.end());
                current.erase(std::unique(current.begin(), current.end()), current.end());
                f.clauses.push_back(current);
                current.clear();
                continue;
            }
            int var = static_cast<int>(lit < 0 ? -lit : lit);
            if (var > f.num_vars) {
                std::ostringstream os;
                os << "literal " << lit << " out of range (" << f.num_vars << " variables)";
                throw ParseError(os.str());
            }
            current.push_back({var, lit > 0});
        }
    }
    if (!saw_header) throw ParseError("missing 'p cnf' header");
    if (!current.empty()) throw ParseError("clause not zero-terminated");
    if (static_cast<int>(f.clauses.size()) != declared_clauses) {
        std::ostringstream os;
        os << "header declares " << declared_clauses << " clauses, found " << f.clauses.size();
        throw ParseError(os.str());
    }
    return f;
}

std::string render_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (const Literal& lit : clause) os << (lit.positive ? lit.var : -lit.var) << " ";
        os << "0\n";
    }
    return os.str();
}

}  // namespace pull

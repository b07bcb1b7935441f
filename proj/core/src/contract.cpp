#include "pull/contract.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pull {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

PortPair parse_pair(const std::string& text) {
    size_t arrow = text.find("->");
    if (arrow == std::string::npos)
        throw ParseError("expected '<in>-><out>' in '" + text + "'");
    std::string in = trim(text.substr(0, arrow));
    std::string out = trim(text.substr(arrow + 2));
    if (in.empty() || out.empty()) throw ParseError("bad port pair '" + text + "'");
    return {in, out};
}

}  // namespace

TraceWord parse_trace_word(const std::string& text) {
    TraceWord w;
    std::string t = trim(text);
    if (t.empty()) return w;
    for (const std::string& p : split(t, ',')) w.push_back(parse_pair(trim(p)));
    return w;
}

std::string render_trace_word(const TraceWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ", ";
        os << w[i].first << "->" << w[i].second;
    }
    return os.str();
}

int PortContract::state_index(const std::string& s) const {
    for (size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> PortContract::port_names() const {
    std::set<std::string> names;
    for (const Transition& t : transitions) {
        names.insert(t.in);
        names.insert(t.out);
    }
    for (const TraceWord& w : must_allow)
        for (const auto& [in, out] : w) {
            names.insert(in);
            names.insert(out);
        }
    for (const Forbid& f : must_forbid) {
        for (const auto& [in, out] : f.history) {
            names.insert(in);
            names.insert(out);
        }
        names.insert(f.in);
        names.insert(f.out);
    }
    return {names.begin(), names.end()};
}

void PortContract::validate() const {
    if (states.empty()) throw ParseError("contract '" + name + "' has no states");
    if (initial < 0) throw ParseError("contract '" + name + "' has no initial state");
    std::set<std::string> seen;
    for (const std::string& s : states)
        if (!seen.insert(s).second) throw ParseError("duplicate contract state '" + s + "'");
    for (const Transition& t : transitions) {
        if (t.from < 0 || t.from >= static_cast<int>(states.size()) || t.to < 0 ||
            t.to >= static_cast<int>(states.size()))
            throw ParseError("contract transition references unknown state");
        if (t.in == t.out)
            throw ParseError("contract transitions are cross-traversals; probes are implicit");
        for (const Transition& u : transitions) {
            if (&t != &u && t.from == u.from && t.in == u.in && t.out == u.out && t.to != u.to)
                throw ParseError("contract is nondeterministic on (" + states[t.from] + ", " +
                                 t.in + "->" + t.out + ")");
        }
    }
}

PortContract parse_contract(const std::string& text) {
    PortContract c;
    std::istringstream in(text);
    std::string line;
    bool sawHeader = false;
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> rawTrans;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        line = trim(line);
        if (line.empty() || line[0] == ';') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "contract") {
            ls >> c.name;
            if (c.name.empty()) throw ParseError("bad 'contract' header line");
            sawHeader = true;
        } else if (kw == "state") {
            std::string name, flag;
            ls >> name >> flag;
            if (name.empty()) throw ParseError("bad 'state' line");
            c.states.push_back(name);
            if (flag == "initial") {
                if (c.initial >= 0) throw ParseError("two initial states");
                c.initial = static_cast<int>(c.states.size()) - 1;
            } else if (!flag.empty()) {
                throw ParseError("unexpected token '" + flag + "' on state line");
            }
        } else if (kw == "trans") {
            std::string from, pin, pout, to;
            ls >> from >> pin >> pout >> to;
            if (to.empty()) throw ParseError("bad 'trans' line: " + line);
            rawTrans.emplace_back(from, pin, pout, to);
        } else if (kw == "allow") {
            c.must_allow.push_back(parse_trace_word(line.substr(5)));
            if (c.must_allow.back().empty()) throw ParseError("empty 'allow' word");
        } else if (kw == "forbid") {
            std::string rest = line.substr(6);
            size_t sep = rest.find(';');
            if (sep == std::string::npos) throw ParseError("'forbid' line missing ';'");
            PortContract::Forbid f;
            f.history = parse_trace_word(rest.substr(0, sep));
            auto [pin, pout] = parse_pair(trim(rest.substr(sep + 1)));
            if (pin == pout)
                throw ParseError("same-port probes are always permitted; cannot forbid " + pin +
                                 " -> " + pout);
            f.in = pin;
            f.out = pout;
            c.must_forbid.push_back(std::move(f));
        } else {
            throw ParseError("unexpected contract line: " + line);
        }
    }
    if (!sawHeader) throw ParseError("missing 'contract' header line");
    for (auto& [from, pin, pout, to] : rawTrans) {
        int fi = c.state_index(from), ti = c.state_index(to);
        if (fi < 0) throw ParseError("trans references unknown state '" + from + "'");
        if (ti < 0) throw ParseError("trans references unknown state '" + to + "'");
        c.transitions.push_back({fi, pin, pout, ti});
    }
    c.validate();
    return c;
}

std::string render_contract(const PortContract& c) {
    std::ostringstream os;
    os << "contract " << c.name << "\n";
    for (size_t i = 0; i < c.states.size(); ++i) {
        os << "state " << c.states[i];
        if (static_cast<int>(i) == c.initial) os << " initial";
        os << "\n";
    }
    for (const auto& t : c.transitions)
        os << "trans " << c.states[t.from] << " " << t.in << " " << t.out << " " << c.states[t.to]
           << "\n";
    for (const TraceWord& w : c.must_allow) os << "allow " << render_trace_word(w) << "\n";
    for (const auto& f : c.must_forbid)
        os << "forbid " << render_trace_word(f.history) << " ; " << f.in << " -> " << f.out << "\n";
    return os.str();
}

}  // namespace pull

#include "zxdd/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zxdd {

namespace {

struct GateSpec {
    GateKind kind;
    uint8_t arity;
    bool has_param;
};

const std::map<std::string, GateSpec>& gate_table() {
    static const std::map<std::string, GateSpec> table = {
        {"H", {GateKind::H, 1, false}},       {"S", {GateKind::S, 1, false}},
        {"SDG", {GateKind::Sdg, 1, false}},   {"T", {GateKind::T, 1, false}},
        {"TDG", {GateKind::Tdg, 1, false}},   {"Z", {GateKind::Z, 1, false}},
        {"X", {GateKind::X, 1, false}},       {"CNOT", {GateKind::CNOT, 2, false}},
        {"CZ", {GateKind::CZ, 2, false}},     {"CCZ", {GateKind::CCZ, 3, false}},
        {"CSWAP", {GateKind::CSWAP, 3, false}}, {"ZPHASE", {GateKind::ZPhase, 1, true}},
        {"CZPHASE", {GateKind::CZPhase, 2, true}},
    };
    return table;
}

void validate(const Gate& g, uint32_t qubits, size_t line) {
    std::set<uint32_t> seen;
    for (int i = 0; i < g.arity; ++i) {
        if (g.q[i] >= qubits)
            throw std::invalid_argument("line " + std::to_string(line) + ": qubit index out of range");
        if (!seen.insert(g.q[i]).second)
            throw std::invalid_argument("line " + std::to_string(line) + ": repeated qubit index");
    }
}

} // namespace

void Circuit::push(const Gate& g) {
    validate(g, qubits, gates.size() + 2);
    gates.push_back(g);
}

int Circuit::pre_simplification_t_count() const {
    int t = 0;
    for (const auto& g : gates) {
        switch (g.kind) {
        case GateKind::T:
        case GateKind::Tdg:
            t += 1;
            break;
        case GateKind::ZPhase:
            t += g.k % 2;
            break;
        case GateKind::CZPhase:
            t += (g.k % 2) * 3;
            break;
        case GateKind::CCZ:
        case GateKind::CSWAP:
            t += 7;
            break;
        default:
            break;
        }
    }
    return t;
}

const char* gate_name(GateKind k) {
    switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::Z: return "Z";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CCZ: return "CCZ";
    case GateKind::CSWAP: return "CSWAP";
    case GateKind::ZPhase: return "ZPHASE";
    case GateKind::CZPhase: return "CZPHASE";
    }
    return "?";
}

std::string serialize(const Circuit& c) {
    std::ostringstream os;
    if (!c.meta.klass.empty())
        os << "# class " << c.meta.klass << "\n";
    if (c.meta.seed != 0 || !c.meta.klass.empty())
        os << "# seed " << c.meta.seed << "\n";
    for (const auto& [k, v] : c.meta.params)
        os << "# param " << k << " " << v << "\n";
    os << "qubits " << c.qubits << "\n";
    for (const auto& g : c.gates) {
        os << gate_name(g.kind);
        for (int i = 0; i < g.arity; ++i)
            os << " " << g.q[i];
        if (g.kind == GateKind::ZPhase || g.kind == GateKind::CZPhase)
            os << " " << g.k;
        os << "\n";
    }
    return os.str();
}

Circuit parse(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    bool have_qubits = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok.empty())
            continue;
        if (tok == "#") {
            std::string key;
            ls >> key;
            if (key == "class")
                ls >> c.meta.klass;
            else if (key == "seed")
                ls >> c.meta.seed;
            else if (key == "param") {
                std::string k, v;
                ls >> k >> v;
                c.meta.params[k] = v;
            }
            continue;
        }
        if (!have_qubits) {
            if (tok != "qubits")
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected `qubits N`");
            if (!(ls >> c.qubits) || c.qubits == 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad qubit count");
            have_qubits = true;
            continue;
        }
        std::string name = tok;
        std::transform(name.begin(), name.end(), name.begin(), ::toupper);
        auto it = gate_table().find(name);
        if (it == gate_table().end())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown gate `" + tok + "`");
        Gate g;
        g.kind = it->second.kind;
        g.arity = it->second.arity;
        for (int i = 0; i < g.arity; ++i)
            if (!(ls >> g.q[i]))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": missing qubit index");
        if (it->second.has_param) {
            if (!(ls >> g.k))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": missing phase parameter");
            int mod = g.kind == GateKind::ZPhase ? 8 : 4;
            g.k = ((g.k % mod) + mod) % mod;
        }
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        validate(g, c.qubits, lineno);
        c.gates.push_back(g);
    }
    if (!have_qubits)
        throw std::invalid_argument("missing `qubits` header");
    return c;
}

Circuit parse_qasm(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    std::string reg;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("qasm line " + std::to_string(lineno) + ": " + msg);
    };
    static const std::map<std::string, std::pair<GateKind, uint8_t>> qasm_gates = {
        {"h", {GateKind::H, 1}},     {"s", {GateKind::S, 1}},      {"sdg", {GateKind::Sdg, 1}},
        {"t", {GateKind::T, 1}},     {"tdg", {GateKind::Tdg, 1}},  {"z", {GateKind::Z, 1}},
        {"x", {GateKind::X, 1}},     {"cx", {GateKind::CNOT, 2}},  {"cz", {GateKind::CZ, 2}},
        {"ccz", {GateKind::CCZ, 3}}, {"cswap", {GateKind::CSWAP, 3}},
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto cut = line.find("//");
        if (cut != std::string::npos)
            line = line.substr(0, cut);
        // strip whitespace
        auto notsp = [](int ch) { return !std::isspace(ch); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notsp));
        line.erase(std::find_if(line.rbegin(), line.rend(), notsp).base(), line.end());
        if (line.empty())
            continue;
        if (line.back() != ';')
            fail("missing `;`");
        line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "OPENQASM") {
            std::string ver;
            ls >> ver;
            if (ver != "2.0")
                fail("unsupported OPENQASM version");
            continue;
        }
        if (tok == "include")
            continue;
        if (tok == "qreg") {
            std::string decl;
            ls >> decl;
            auto lb = decl.find('['), rb = decl.find(']');
            if (lb == std::string::npos || rb == std::string::npos)
                fail("bad qreg declaration");
            reg = decl.substr(0, lb);
            c.qubits = static_cast<uint32_t>(std::stoul(decl.substr(lb + 1, rb - lb - 1)));
            continue;
        }
        if (tok == "creg" || tok == "barrier")
            continue;
        auto it = qasm_gates.find(tok);
        if (it == qasm_gates.end())
            fail("unsupported gate `" + tok + "`");
        if (reg.empty())
            fail("gate before qreg");
        std::string args;
        std::getline(ls, args);
        Gate g;
        g.kind = it->second.first;
        g.arity = it->second.second;
        size_t pos = 0;
        for (int i = 0; i < g.arity; ++i) {
            auto lb = args.find('[', pos);
            auto rb = args.find(']', lb);
            if (lb == std::string::npos || rb == std::string::npos)
                fail("bad operand list");
            if (args.substr(args.find_first_not_of(" ,", pos), lb - args.find_first_not_of(" ,", pos)) != reg)
                fail("unknown register");
            g.q[i] = static_cast<uint32_t>(std::stoul(args.substr(lb + 1, rb - lb - 1)));
            pos = rb + 1;
        }
        validate(g, c.qubits, lineno);
        c.gates.push_back(g);
    }
    if (c.qubits == 0)
        fail("missing qreg");
    return c;
}

} // namespace zxdd

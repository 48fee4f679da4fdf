#include "nilgeo/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nilgeo {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break; // comment to end of line
        toks.push_back(t);
    }
    return toks;
}

Rational real_scalar(const std::string& text, int line, const std::string& what) {
    GaussianRational z;
    try {
        z = parse_scalar(text);
    } catch (const ParseError& e) {
        throw DocumentError(line, std::string(e.what()));
    }
    if (!z.is_real()) throw DocumentError(line, what + " must be real, got \"" + text + "\"");
    return z.re;
}

int parse_index(const std::string& text, int line, int dim) {
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DocumentError(line, "expected a basis index, got \"" + text + "\"");
    long v = std::stol(text);
    if (v < 1 || v > dim)
        throw DocumentError(line, "index out of range: " + text + " (dim " + std::to_string(dim) + ")");
    return int(v - 1);
}

} // namespace

AlgebraDocument parse_document(const std::string& text) {
    AlgebraDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_name = false, saw_dim = false, saw_basis = false, saw_end = false;
    std::map<std::pair<int, int>, int> bracket_lines;

    auto next_tokens = [&](std::vector<std::string>& out) {
        while (std::getline(in, line)) {
            lineno++;
            out = tokens_of(line);
            if (!out.empty()) return true;
        }
        return false;
    };

    auto read_matrix_rows = [&](const std::string& what) {
        RationalMatrix mtx(doc.dim, doc.dim);
        for (int r = 0; r < doc.dim; r++) {
            std::vector<std::string> toks;
            if (!next_tokens(toks))
                throw DocumentError(lineno, "unexpected end of document inside " + what);
            if (int(toks.size()) != doc.dim)
                throw DocumentError(lineno, what + " row " + std::to_string(r + 1) + " has " +
                                                std::to_string(toks.size()) + " entries, expected " +
                                                std::to_string(doc.dim));
            for (int c = 0; c < doc.dim; c++)
                mtx.at(r, c) = real_scalar(toks[c], lineno, what + " entry");
        }
        return mtx;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks) || toks.size() != 2 || toks[0] != "nilgeo" || toks[1] != "1")
        throw DocumentError(lineno == 0 ? 1 : lineno, "expected header \"nilgeo 1\"");
    saw_header = true;

    while (next_tokens(toks)) {
        const std::string& kw = toks[0];
        if (kw == "end") {
            if (toks.size() != 1) throw DocumentError(lineno, "unexpected tokens after \"end\"");
            saw_end = true;
            break;
        }
        if (kw == "name") {
            if (saw_name) throw DocumentError(lineno, "duplicate \"name\"");
            if (toks.size() != 2) throw DocumentError(lineno, "\"name\" takes exactly one token");
            doc.name = toks[1];
            saw_name = true;
        } else if (kw == "dim") {
            if (saw_dim) throw DocumentError(lineno, "duplicate \"dim\"");
            if (toks.size() != 2) throw DocumentError(lineno, "\"dim\" takes exactly one integer");
            for (char c : toks[1])
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw DocumentError(lineno, "\"dim\" must be a positive integer");
            doc.dim = std::stoi(toks[1]);
            if (doc.dim < 1 || doc.dim > 63) throw DocumentError(lineno, "dim must be in 1..63");
            saw_dim = true;
        } else if (kw == "basis") {
            if (saw_basis) throw DocumentError(lineno, "duplicate \"basis\"");
            if (!saw_dim) throw DocumentError(lineno, "\"basis\" requires \"dim\" first");
            if (int(toks.size()) != doc.dim + 1)
                throw DocumentError(lineno, "\"basis\" needs exactly dim names");
            doc.basis.assign(toks.begin() + 1, toks.end());
            for (size_t a = 0; a < doc.basis.size(); a++)
                for (size_t b = a + 1; b < doc.basis.size(); b++)
                    if (doc.basis[a] == doc.basis[b])
                        throw DocumentError(lineno, "duplicate basis name \"" + doc.basis[a] + "\"");
            saw_basis = true;
        } else if (kw == "bracket") {
            if (!saw_dim) throw DocumentError(lineno, "\"bracket\" requires \"dim\" first");
            if (toks.size() < 5 || toks[3] != "=")
                throw DocumentError(lineno, "bracket syntax: bracket i j = k:coeff [k:coeff ...]");
            BracketSpec spec;
            spec.x = parse_index(toks[1], lineno, doc.dim);
            spec.y = parse_index(toks[2], lineno, doc.dim);
            if (spec.x >= spec.y)
                throw DocumentError(lineno, "bracket records require x < y (got " + toks[1] + " " + toks[2] + ")");
            auto key = std::make_pair(spec.x, spec.y);
            if (bracket_lines.count(key))
                throw DocumentError(lineno, "duplicate bracket record for pair " + toks[1] + " " + toks[2]);
            bracket_lines[key] = lineno;
            for (size_t t = 4; t < toks.size(); t++) {
                auto colon = toks[t].find(':');
                if (colon == std::string::npos)
                    throw DocumentError(lineno, "bracket term must be k:coeff, got \"" + toks[t] + "\"");
                int k = parse_index(toks[t].substr(0, colon), lineno, doc.dim);
                Rational c = real_scalar(toks[t].substr(colon + 1), lineno, "bracket coefficient");
                spec.terms.push_back({k, c});
            }
            doc.brackets.push_back(std::move(spec));
        } else if (kw == "matrix") {
            if (!saw_dim) throw DocumentError(lineno, "\"matrix\" requires \"dim\" first");
            if (toks.size() != 2 || (toks[1] != "I" && toks[1] != "J" && toks[1] != "K"))
                throw DocumentError(lineno, "matrix name must be one of I, J, K");
            if (doc.endos.count(toks[1]))
                throw DocumentError(lineno, "duplicate matrix \"" + toks[1] + "\"");
            std::string which = toks[1];
            doc.endos.emplace(which, read_matrix_rows("matrix " + which));
        } else if (kw == "metric") {
            if (!saw_dim) throw DocumentError(lineno, "\"metric\" requires \"dim\" first");
            if (toks.size() != 1) throw DocumentError(lineno, "\"metric\" takes no tokens");
            if (doc.metric) throw DocumentError(lineno, "duplicate \"metric\"");
            RationalMatrix mtx = read_matrix_rows("metric");
            for (int i = 0; i < doc.dim; i++)
                for (int j = i + 1; j < doc.dim; j++)
                    if (mtx.at(i, j) != mtx.at(j, i))
                        throw DocumentError(lineno, "metric not symmetric at entry pair (" +
                                                        std::to_string(i + 1) + "," +
                                                        std::to_string(j + 1) + ")");
            doc.metric = std::move(mtx);
        } else {
            throw DocumentError(lineno, "unknown field \"" + kw + "\"");
        }
    }
    if (!saw_end) throw DocumentError(lineno, "missing \"end\"");
    while (std::getline(in, line)) {
        lineno++;
        if (!tokens_of(line).empty()) throw DocumentError(lineno, "content after \"end\"");
    }
    if (!saw_name) throw DocumentError(lineno, "missing \"name\"");
    if (!saw_dim) throw DocumentError(lineno, "missing \"dim\"");
    if (!saw_basis) {
        for (int i = 1; i <= doc.dim; i++) doc.basis.push_back("e" + std::to_string(i));
    }
    (void)saw_header;
    return doc;
}

std::string emit_document(const AlgebraDocument& doc) {
    std::ostringstream out;
    out << "nilgeo 1\n";
    out << "name " << doc.name << "\n";
    out << "dim " << doc.dim << "\n";
    out << "basis";
    for (const auto& b : doc.basis) out << " " << b;
    out << "\n";
    std::vector<BracketSpec> sorted = doc.brackets;
    std::sort(sorted.begin(), sorted.end(), [](const BracketSpec& a, const BracketSpec& b) {
        return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
    });
    for (const auto& s : sorted) {
        out << "bracket " << (s.x + 1) << " " << (s.y + 1) << " =";
        auto terms = s.terms;
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, c] : terms) out << " " << (k + 1) << ":" << c.str();
        out << "\n";
    }
    for (const char* which : {"I", "J", "K"}) {
        auto it = doc.endos.find(which);
        if (it == doc.endos.end()) continue;
        out << "matrix " << which << "\n";
        for (int r = 0; r < doc.dim; r++) {
            for (int c = 0; c < doc.dim; c++) out << (c ? " " : "") << it->second.at(r, c).str();
            out << "\n";
        }
    }
    if (doc.metric) {
        out << "metric\n";
        for (int r = 0; r < doc.dim; r++) {
            for (int c = 0; c < doc.dim; c++) out << (c ? " " : "") << doc.metric->at(r, c).str();
            out << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

LieAlgebra AlgebraDocument::to_algebra() const {
    std::vector<BracketSpec> specs = brackets;
    for (auto& s : specs) {
        std::map<int, Rational> merged;
        for (const auto& [k, c] : s.terms) merged[k] += c;
        s.terms.clear();
        for (const auto& [k, c] : merged)
            if (!c.is_zero()) s.terms.push_back({k, c});
    }
    return LieAlgebra::create(name, basis, specs);
}

std::optional<HypercomplexStructure> AlgebraDocument::triple() const {
    auto i = endos.find("I");
    auto j = endos.find("J");
    auto k = endos.find("K");
    if (i == endos.end() || j == endos.end() || k == endos.end()) return std::nullopt;
    return HypercomplexStructure{i->second, j->second, k->second};
}

std::optional<RationalMatrix> AlgebraDocument::single_structure() const {
    if (triple()) return std::nullopt;
    auto i = endos.find("I");
    if (i != endos.end()) return i->second;
    auto j = endos.find("J");
    if (j != endos.end()) return j->second;
    auto k = endos.find("K");
    if (k != endos.end()) return k->second;
    return std::nullopt;
}

AlgebraDocument AlgebraDocument::from_entry(const CatalogEntry& entry) {
    AlgebraDocument doc;
    doc.name = entry.name;
    doc.dim = entry.g.dim();
    doc.basis = entry.g.basis_names();
    doc.brackets = entry.g.bracket_specs();
    if (entry.triple) {
        doc.endos.emplace("I", entry.triple->I);
        doc.endos.emplace("J", entry.triple->J);
        doc.endos.emplace("K", entry.triple->K);
    } else if (entry.I) {
        doc.endos.emplace("I", *entry.I);
    }
    doc.metric = entry.metric;
    return doc;
}

} // namespace nilgeo

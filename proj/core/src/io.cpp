#include "nclwe/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace nclwe::io {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Doc {
    std::map<std::string, std::string> header;
    std::vector<std::pair<std::string, std::vector<std::string>>> sections;

    const std::string& get(const std::string& key) const {
        auto it = header.find(key);
        if (it == header.end()) throw FormatError("missing header field `" + key + "`");
        return it->second;
    }

    std::uint64_t get_u64(const std::string& key) const {
        const std::string& s = get(key);
        std::size_t pos = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            throw FormatError("field `" + key + "`: not an integer: " + s);
        }
        if (pos != s.size()) throw FormatError("field `" + key + "`: trailing junk: " + s);
        return v;
    }

    double get_double(const std::string& key) const {
        try {
            return std::stod(get(key));
        } catch (const std::exception&) {
            throw FormatError("field `" + key + "`: not a number");
        }
    }

    const std::vector<std::string>& section(const std::string& name) const {
        for (const auto& [n, lines] : sections)
            if (n == name) return lines;
        throw FormatError("missing section `" + name + "`");
    }
};

Doc parse_doc(std::istream& is, const std::string& expected_format) {
    Doc doc;
    std::string line;
    std::vector<std::string>* current = nullptr;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::size_t colon = line.find(':');
        if (colon != std::string::npos && colon + 1 == line.size() &&
            line.find(' ') == std::string::npos) {
            doc.sections.emplace_back(line.substr(0, colon), std::vector<std::string>{});
            current = &doc.sections.back().second;
        } else if (current) {
            current->push_back(line);
        } else {
            if (colon == std::string::npos || colon + 2 > line.size() || line[colon + 1] != ' ')
                throw FormatError("malformed header line: " + line);
            doc.header[line.substr(0, colon)] = line.substr(colon + 2);
        }
    }
    if (doc.get("format") != expected_format)
        throw FormatError("expected format `" + expected_format + "`, found `" +
                          doc.get("format") + "`");
    if (doc.get_u64("version") != 1) throw FormatError("unsupported document version");
    return doc;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

std::uint64_t parse_u64(const std::string& s) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw FormatError("bad integer: " + s);
        return v;
    } catch (const std::exception&) {
        throw FormatError("bad integer: " + s);
    }
}

std::vector<std::uint64_t> parse_u64_line(const std::string& line, std::size_t expected) {
    const auto toks = tokenize(line);
    if (toks.size() != expected)
        throw FormatError("expected " + std::to_string(expected) + " integers, found " +
                          std::to_string(toks.size()));
    std::vector<std::uint64_t> out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(parse_u64(t));
    return out;
}

ElementVector parse_element_line(const std::string& line, std::size_t expected,
                                 const GroupParams& p) {
    const auto toks = tokenize(line);
    if (toks.size() != expected)
        throw FormatError("expected " + std::to_string(expected) + " elements, found " +
                          std::to_string(toks.size()));
    ElementVector out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(parse_element(t, p));
    return out;
}

void write_element_line(std::ostream& os, std::span<const GroupElement> row) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << to_string(row[j]);
    os << '\n';
}

void write_u64_line(std::ostream& os, std::span<const std::uint64_t> row) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
}

const std::string& single_line(const std::vector<std::string>& lines, const char* what) {
    if (lines.size() != 1) throw FormatError(std::string("section `") + what + "` needs one line");
    return lines[0];
}

}  // namespace

GroupElement parse_element(const std::string& token, const GroupParams& p) {
    std::uint64_t alpha = 0, k = 0;
    int consumed = 0;
    if (std::sscanf(token.c_str(), "(%" SCNu64 ",%" SCNu64 ")%n", &alpha, &k, &consumed) != 2 ||
        static_cast<std::size_t>(consumed) != token.size())
        throw FormatError("bad element token: " + token);
    if (alpha > 1 || k >= p.rho) throw FormatError("element out of range: " + token);
    return GroupElement{static_cast<std::uint32_t>(alpha), k};
}

std::string format_of(std::istream& is) {
    const auto pos = is.tellg();
    std::string line;
    std::string fmt;
    if (std::getline(is, line) && line.rfind("format: ", 0) == 0) fmt = line.substr(8);
    is.clear();
    is.seekg(pos);
    if (fmt.empty()) throw FormatError("document does not start with a `format:` line");
    return fmt;
}

// ---- M_{2^t} ----

void serialize(std::ostream& os, const M2tPublicKey& pk) {
    os << "format: m2t-pub\nversion: 1\n";
    os << "t: " << pk.params.group.t << '\n';
    os << "m: " << pk.params.m << '\n';
    os << "n: " << pk.params.n << '\n';
    os << "nc: " << pk.params.n_c << '\n';
    os << "sigma: " << format_double(pk.params.sigma) << '\n';
    os << "W:\n";
    for (std::size_t i = 0; i < pk.W.rows; ++i) write_element_line(os, pk.W.row(i));
    os << "v:\n";
    write_element_line(os, pk.v);
}

M2tPublicKey parse_m2t_public(std::istream& is) {
    const Doc doc = parse_doc(is, "m2t-pub");
    M2tPublicKey pk;
    pk.params.group = GroupParams::for_t(static_cast<unsigned>(doc.get_u64("t")));
    pk.params.m = doc.get_u64("m");
    pk.params.n = doc.get_u64("n");
    pk.params.n_c = doc.get_u64("nc");
    pk.params.sigma = doc.get_double("sigma");
    pk.params.validate();
    const auto& w_lines = doc.section("W");
    if (w_lines.size() != pk.params.m) throw FormatError("W row count mismatch");
    pk.W = ElementMatrix(pk.params.m, pk.params.n);
    for (std::size_t i = 0; i < pk.params.m; ++i) {
        const ElementVector row = parse_element_line(w_lines[i], pk.params.n, pk.params.group);
        for (std::size_t j = 0; j < pk.params.n; ++j) pk.W.at(i, j) = row[j];
    }
    pk.v = parse_element_line(single_line(doc.section("v"), "v"), pk.params.m, pk.params.group);
    return pk;
}

void serialize(std::ostream& os, const M2tSecretKey& sk) {
    os << "format: m2t-sec\nversion: 1\n";
    os << "t: " << sk.group.t << '\n';
    os << "n: " << sk.x.size() << '\n';
    os << "x:\n";
    write_u64_line(os, sk.x);
}

M2tSecretKey parse_m2t_secret(std::istream& is) {
    const Doc doc = parse_doc(is, "m2t-sec");
    M2tSecretKey sk;
    sk.group = GroupParams::for_t(static_cast<unsigned>(doc.get_u64("t")));
    sk.x = parse_u64_line(single_line(doc.section("x"), "x"), doc.get_u64("n"));
    for (std::uint64_t xi : sk.x)
        if (xi >= sk.group.rho) throw FormatError("secret exponent out of range");
    return sk;
}

void serialize(std::ostream& os, const M2tCiphertext& ct, const GroupParams& p) {
    os << "format: m2t-ct\nversion: 1\n";
    os << "t: " << p.t << '\n';
    os << "n: " << ct.w.size() << '\n';
    os << "w:\n";
    write_element_line(os, ct.w);
    os << "c:\n";
    os << to_string(ct.c) << '\n';
}

M2tCiphertext parse_m2t_ciphertext(std::istream& is, GroupParams* params_out) {
    const Doc doc = parse_doc(is, "m2t-ct");
    const GroupParams p = GroupParams::for_t(static_cast<unsigned>(doc.get_u64("t")));
    M2tCiphertext ct;
    ct.w = parse_element_line(single_line(doc.section("w"), "w"), doc.get_u64("n"), p);
    ct.c = parse_element(single_line(doc.section("c"), "c"), p);
    if (params_out) *params_out = p;
    return ct;
}

// ---- Regev ----

namespace {

void write_regev_params(std::ostream& os, const RegevParams& p) {
    os << "n: " << p.n << '\n';
    os << "q: " << p.q << '\n';
    os << "m: " << p.m << '\n';
    os << "sigma: " << format_double(p.sigma) << '\n';
}

RegevParams read_regev_params(const Doc& doc) {
    RegevParams p;
    p.n = doc.get_u64("n");
    p.q = doc.get_u64("q");
    p.m = doc.get_u64("m");
    p.sigma = doc.get_double("sigma");
    return p;
}

}  // namespace

void serialize(std::ostream& os, const RegevPublicKey& pk) {
    os << "format: regev-pub\nversion: 1\n";
    write_regev_params(os, pk.params);
    os << "A:\n";
    for (const auto& row : pk.A) write_u64_line(os, row);
    os << "b:\n";
    write_u64_line(os, pk.b);
}

RegevPublicKey parse_regev_public(std::istream& is) {
    const Doc doc = parse_doc(is, "regev-pub");
    RegevPublicKey pk;
    pk.params = read_regev_params(doc);
    const auto& a_lines = doc.section("A");
    if (a_lines.size() != pk.params.m) throw FormatError("A row count mismatch");
    for (const auto& line : a_lines) pk.A.push_back(parse_u64_line(line, pk.params.n));
    pk.b = parse_u64_line(single_line(doc.section("b"), "b"), pk.params.m);
    return pk;
}

void serialize(std::ostream& os, const RegevSecretKey& sk) {
    os << "format: regev-sec\nversion: 1\n";
    write_regev_params(os, sk.params);
    os << "x:\n";
    write_u64_line(os, sk.x);
}

RegevSecretKey parse_regev_secret(std::istream& is) {
    const Doc doc = parse_doc(is, "regev-sec");
    RegevSecretKey sk;
    sk.params = read_regev_params(doc);
    sk.x = parse_u64_line(single_line(doc.section("x"), "x"), sk.params.n);
    return sk;
}

void serialize(std::ostream& os, const RegevCiphertext& ct, const RegevParams& params) {
    os << "format: regev-ct\nversion: 1\n";
    os << "q: " << params.q << '\n';
    os << "n: " << ct.a.size() << '\n';
    os << "a:\n";
    write_u64_line(os, ct.a);
    os << "c:\n";
    os << ct.c << '\n';
}

RegevCiphertext parse_regev_ciphertext(std::istream& is) {
    const Doc doc = parse_doc(is, "regev-ct");
    RegevCiphertext ct;
    ct.a = parse_u64_line(single_line(doc.section("a"), "a"), doc.get_u64("n"));
    ct.c = parse_u64(single_line(doc.section("c"), "c"));
    return ct;
}

// ---- Sylow ----

namespace {

void write_sylow_params(std::ostream& os, const SylowInstanceParams& p) {
    os << "p: " << p.sylow.p << '\n';
    os << "q: " << p.sylow.q << '\n';
    os << "g: " << p.sylow.g << '\n';
    os << "n: " << p.n << '\n';
    os << "m: " << p.m << '\n';
    os << "sigma: " << format_double(p.sigma) << '\n';
}

SylowInstanceParams read_sylow_params(const Doc& doc) {
    SylowInstanceParams p;
    p.sylow.p = doc.get_u64("p");
    p.sylow.q = doc.get_u64("q");
    p.sylow.g = doc.get_u64("g");
    p.n = doc.get_u64("n");
    p.m = doc.get_u64("m");
    p.sigma = doc.get_double("sigma");
    return p;
}

}  // namespace

void serialize(std::ostream& os, const SylowPublicKey& pk) {
    os << "format: sylow-pub\nversion: 1\n";
    write_sylow_params(os, pk.params);
    os << "A:\n";
    for (const auto& row : pk.A) write_u64_line(os, row);
    os << "b:\n";
    write_u64_line(os, pk.b);
}

SylowPublicKey parse_sylow_public(std::istream& is) {
    const Doc doc = parse_doc(is, "sylow-pub");
    SylowPublicKey pk;
    pk.params = read_sylow_params(doc);
    const auto& a_lines = doc.section("A");
    if (a_lines.size() != pk.params.m) throw FormatError("A row count mismatch");
    for (const auto& line : a_lines) pk.A.push_back(parse_u64_line(line, pk.params.n));
    pk.b = parse_u64_line(single_line(doc.section("b"), "b"), pk.params.m);
    return pk;
}

void serialize(std::ostream& os, const SylowSecretKey& sk) {
    os << "format: sylow-sec\nversion: 1\n";
    write_sylow_params(os, sk.params);
    os << "x:\n";
    write_u64_line(os, sk.x);
}

SylowSecretKey parse_sylow_secret(std::istream& is) {
    const Doc doc = parse_doc(is, "sylow-sec");
    SylowSecretKey sk;
    sk.params = read_sylow_params(doc);
    sk.x = parse_u64_line(single_line(doc.section("x"), "x"), sk.params.n);
    return sk;
}

void serialize(std::ostream& os, const SylowCiphertext& ct, const SylowInstanceParams& params) {
    os << "format: sylow-ct\nversion: 1\n";
    os << "p: " << params.sylow.p << '\n';
    os << "q: " << params.sylow.q << '\n';
    os << "g: " << params.sylow.g << '\n';
    os << "n: " << ct.a.size() << '\n';
    os << "a:\n";
    write_u64_line(os, ct.a);
    os << "c:\n";
    os << ct.c << '\n';
}

SylowCiphertext parse_sylow_ciphertext(std::istream& is) {
    const Doc doc = parse_doc(is, "sylow-ct");
    SylowCiphertext ct;
    ct.a = parse_u64_line(single_line(doc.section("a"), "a"), doc.get_u64("n"));
    ct.c = parse_u64(single_line(doc.section("c"), "c"));
    return ct;
}

}  // namespace nclwe::io

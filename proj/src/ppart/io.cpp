#include "ppart/io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "ppart/error.hpp"

namespace ppart {

namespace {

Instance parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer())
        fail(errc::parse, "expected an object with an integer \"p\"");
    int p = j["p"].get<int>();
    std::vector<std::pair<int, int>> covers;
    std::set<std::pair<int, int>> seen;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) fail(errc::parse, "\"covers\" must be an array of pairs");
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                !c[1].is_number_integer())
                fail(errc::parse, "\"covers\" must be an array of pairs");
            std::pair<int, int> pr{c[0].get<int>(), c[1].get<int>()};
            if (!seen.insert(pr).second) fail(errc::parse, "duplicate cover");
            covers.push_back(pr);
        }
    }
    std::optional<Restriction> rho;
    if (j.contains("rho")) {
        if (!j["rho"].is_array() || static_cast<int>(j["rho"].size()) != p)
            fail(errc::parse, "\"rho\" must be an array of length p");
        Restriction r;
        for (const auto& v : j["rho"]) {
            if (!v.is_number_integer()) fail(errc::parse, "\"rho\" entries must be integers");
            r.push_back(v.get<int>());
        }
        rho = std::move(r);
    }
    try {
        return Instance{Poset::from_covers(p, covers), std::move(rho)};
    } catch (const error& e) {
        if (e.code() == errc::cycle || e.code() == errc::out_of_range)
            fail(errc::parse, e.what());
        throw;
    }
}

Instance parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int p = -1;
    std::vector<std::pair<int, int>> covers;
    std::set<std::pair<int, int>> seen;
    std::vector<std::optional<int>> rho_entries;
    bool has_rho = false;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno) + ": ";
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (p < 0) {
            int v = -1;
            if (head.rfind("p=", 0) == 0) {
                std::istringstream num(head.substr(2));
                if (!(num >> v) || !num.eof()) v = -1;
            }
            if (v < 0) fail(errc::parse, where + "expected p=<int> first");
            p = v;
            rho_entries.assign(static_cast<std::size_t>(p), std::nullopt);
            std::string extra;
            if (ls >> extra) fail(errc::parse, where + "trailing tokens after p=");
            continue;
        }
        if (head == "cover") {
            int i, j;
            std::string extra;
            if (!(ls >> i >> j) || (ls >> extra)) fail(errc::parse, where + "expected: cover i j");
            if (!seen.insert({i, j}).second) fail(errc::parse, where + "duplicate cover");
            covers.emplace_back(i, j);
        } else if (head == "rho") {
            int i, v;
            std::string extra;
            if (!(ls >> i >> v) || (ls >> extra)) fail(errc::parse, where + "expected: rho i v");
            if (i < 1 || i > p) fail(errc::parse, where + "rho label outside 1..p");
            if (rho_entries[static_cast<std::size_t>(i) - 1])
                fail(errc::parse, where + "duplicate rho for label " + std::to_string(i));
            rho_entries[static_cast<std::size_t>(i) - 1] = v;
            has_rho = true;
        } else {
            fail(errc::parse, where + "unknown directive '" + head + "'");
        }
    }
    if (p < 0) fail(errc::parse, "missing p=<int>");

    std::optional<Restriction> rho;
    if (has_rho) {
        Restriction r(static_cast<std::size_t>(p));
        for (int i = 1; i <= p; ++i) {
            if (!rho_entries[static_cast<std::size_t>(i) - 1])
                fail(errc::parse, "missing rho for label " + std::to_string(i));
            r[static_cast<std::size_t>(i) - 1] = *rho_entries[static_cast<std::size_t>(i) - 1];
        }
        rho = std::move(r);
    }
    try {
        return Instance{Poset::from_covers(p, covers), std::move(rho)};
    } catch (const error& e) {
        if (e.code() == errc::cycle || e.code() == errc::out_of_range)
            fail(errc::parse, e.what());
        throw;
    }
}

} // namespace

Instance parse_instance(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return parse_json(text);
        break;
    }
    return parse_text(text);
}

std::string format_polynomial_text(const IntPolynomial& poly) {
    if (poly.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [e, c] : poly.sorted_terms()) {
        os << c;
        for (int v : e) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::string format_polynomial_json(const IntPolynomial& poly) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : poly.sorted_terms()) terms.push_back({c, e});
    nlohmann::json j{{"schema", 1}, {"kind", "polynomial"}, {"nvars", poly.nvars()}, {"terms", terms}};
    return j.dump(2) + "\n";
}

std::string format_expansion_text(const SlideExpansion& e) {
    if (e.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [key, c] : e.sorted_terms()) {
        os << c << " F(";
        for (std::size_t k = 0; k < key.size(); ++k) os << (k ? "," : "") << key[k];
        os << ")\n";
    }
    return os.str();
}

std::string format_expansion_json(const SlideExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : e.sorted_terms()) terms.push_back({c, key});
    nlohmann::json j{{"schema", 1}, {"kind", "slide_expansion"}, {"terms", terms}};
    return j.dump(2) + "\n";
}

} // namespace ppart

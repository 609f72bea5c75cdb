// Command-line front end. Talks to the library strictly through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppart.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_parse = 2;
constexpr int exit_precondition = 3;
constexpr int exit_verify = 4;

int exit_code(ppart_status st) {
    switch (st) {
        case PPART_OK: return exit_ok;
        case PPART_ERR_PARSE: return exit_parse;
        case PPART_ERR_NOT_A_FLAG:
        case PPART_ERR_SIZE_MISMATCH: return exit_precondition;
        case PPART_ERR_VERIFY: return exit_verify;
        default: return exit_error;
    }
}

int complain(ppart_status st) {
    std::cerr << "error: " << ppart_status_name(st) << ": " << ppart_last_error() << "\n";
    return exit_code(st);
}

struct StringOut {
    char* s = nullptr;
    ~StringOut() { ppart_string_free(s); }
};

bool parse_parts(const std::string& text, std::vector<int32_t>& out) {
    out.clear();
    if (text.empty()) return true;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) return false;
            out.push_back(v);
        } catch (...) {
            return false;
        }
    }
    return !text.ends_with(',');
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int print_expansion(const ppart_expansion* e, bool json) {
    StringOut s;
    ppart_status st = ppart_expansion_format(e, json ? 1 : 0, &s.s);
    if (st != PPART_OK) return complain(st);
    std::fputs(s.s, stdout);
    return exit_ok;
}

int print_polynomial(const ppart_polynomial* poly, bool json) {
    StringOut s;
    ppart_status st = ppart_polynomial_format(poly, json ? 1 : 0, &s.s);
    if (st != PPART_OK) return complain(st);
    std::fputs(s.s, stdout);
    return exit_ok;
}

struct Handles {
    ppart_instance* instance = nullptr;
    ppart_expansion *e0 = nullptr, *e1 = nullptr, *e2 = nullptr;
    ppart_polynomial *p0 = nullptr, *p1 = nullptr, *p2 = nullptr, *p3 = nullptr;
    ~Handles() {
        ppart_instance_free(instance);
        ppart_expansion_free(e0);
        ppart_expansion_free(e1);
        ppart_expansion_free(e2);
        ppart_polynomial_free(p0);
        ppart_polynomial_free(p1);
        ppart_polynomial_free(p2);
        ppart_polynomial_free(p3);
    }
};

int load_instance(const std::string& path, bool need_bounds, Handles& h,
                  std::vector<int32_t>& bounds) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return exit_parse;
    }
    ppart_status st = ppart_instance_parse(text.c_str(), &h.instance);
    if (st != PPART_OK) return complain(st);
    if (need_bounds && !ppart_instance_has_bounds(h.instance)) {
        std::cerr << "error: '" << path << "' carries no rho bounds\n";
        return exit_parse;
    }
    if (ppart_instance_has_bounds(h.instance)) {
        bounds.resize(static_cast<std::size_t>(ppart_poset_order(ppart_instance_poset(h.instance))));
        st = ppart_instance_bounds(h.instance, bounds.data(),
                                   static_cast<int32_t>(bounds.size()));
        if (st != PPART_OK) return complain(st);
    }
    return exit_ok;
}

int cmd_expand(const std::string& path, bool general, bool check, bool json) {
    Handles h;
    std::vector<int32_t> bounds;
    if (int rc = load_instance(path, true, h, bounds); rc != exit_ok) return rc;
    const ppart_poset* poset = ppart_instance_poset(h.instance);
    int32_t n = static_cast<int32_t>(bounds.size());

    if (general) {
        ppart_status st = ppart_generating_polynomial(poset, bounds.data(), n, &h.p0);
        if (st != PPART_OK) return complain(st);
        st = ppart_expand_general(h.p0, &h.e0);
        if (st != PPART_OK) return complain(st);
        if (check) { // exact round trip back to the monomial expansion
            st = ppart_expansion_to_polynomial(h.e0, ppart_polynomial_nvars(h.p0), &h.p1);
            if (st != PPART_OK) return complain(st);
            if (!ppart_polynomial_equal(h.p0, h.p1)) {
                std::cerr << "error: expansion failed the round-trip check\n";
                return exit_verify;
            }
        }
        return print_expansion(h.e0, json);
    }

    ppart_status st = ppart_expand_flagged(poset, bounds.data(), n, &h.e0);
    if (st != PPART_OK) return complain(st);
    if (check) {
        st = ppart_generating_polynomial(poset, bounds.data(), n, &h.p0);
        if (st != PPART_OK) return complain(st);
        st = ppart_expansion_to_polynomial(h.e0, 0, &h.p1);
        if (st != PPART_OK) return complain(st);
        if (!ppart_polynomial_equal(h.p0, h.p1)) {
            std::cerr << "error: slide expansion disagrees with the brute-force polynomial\n";
            return exit_verify;
        }
    }
    return print_expansion(h.e0, json);
}

int cmd_product(const std::string& astr, const std::string& bstr, const std::string& method,
                bool check, bool json) {
    std::vector<int32_t> a, b;
    if (!parse_parts(astr, a) || !parse_parts(bstr, b)) {
        std::cerr << "error: compositions must be comma-separated integers\n";
        return exit_parse;
    }
    Handles h;
    int32_t m = method == "bump" ? 1 : 0;
    ppart_status st = ppart_slide_product(a.data(), static_cast<int32_t>(a.size()), b.data(),
                                          static_cast<int32_t>(b.size()), m, &h.e0);
    if (st != PPART_OK) return complain(st);
    if (check) {
        st = ppart_slide_product(a.data(), static_cast<int32_t>(a.size()), b.data(),
                                 static_cast<int32_t>(b.size()), 1 - m, &h.e1);
        if (st != PPART_OK) return complain(st);
        int32_t nv = std::max<int32_t>({1, static_cast<int32_t>(a.size()),
                                        static_cast<int32_t>(b.size())});
        if (ppart_slide_polynomial(a.data(), static_cast<int32_t>(a.size()), nv, &h.p0) != PPART_OK ||
            ppart_slide_polynomial(b.data(), static_cast<int32_t>(b.size()), nv, &h.p1) != PPART_OK ||
            ppart_polynomial_mul(h.p0, h.p1, &h.p2) != PPART_OK ||
            ppart_expand_general(h.p2, &h.e2) != PPART_OK)
            return complain(PPART_ERR_INTERNAL);
        if (!ppart_expansion_equal(h.e0, h.e1) || !ppart_expansion_equal(h.e0, h.e2)) {
            std::cerr << "error: product routes disagree\n";
            return exit_verify;
        }
    }
    return print_expansion(h.e0, json);
}

int cmd_schur(const std::string& shape_str, const std::string& flag_str, bool check, bool json) {
    std::vector<int32_t> shape, flag;
    if (!parse_parts(shape_str, shape) || !parse_parts(flag_str, flag) || shape.empty()) {
        std::cerr << "error: --shape and --flag take comma-separated integers\n";
        return exit_parse;
    }
    Handles h;
    ppart_status st = ppart_flagged_schur_expansion(shape.data(), static_cast<int32_t>(shape.size()),
                                                    flag.data(), static_cast<int32_t>(flag.size()),
                                                    &h.e0);
    if (st == PPART_ERR_ARGUMENT || st == PPART_ERR_SIZE_MISMATCH) return complain(st), exit_parse;
    if (st != PPART_OK) return complain(st);
    if (check) {
        st = ppart_flagged_schur(shape.data(), static_cast<int32_t>(shape.size()), flag.data(),
                                 static_cast<int32_t>(flag.size()), &h.p0);
        if (st != PPART_OK) return complain(st);
        st = ppart_expansion_to_polynomial(h.e0, ppart_polynomial_nvars(h.p0), &h.p1);
        if (st != PPART_OK) return complain(st);
        if (!ppart_polynomial_equal(h.p0, h.p1)) {
            std::cerr << "error: expansion disagrees with the tableau polynomial\n";
            return exit_verify;
        }
    }
    return print_expansion(h.e0, json);
}

int cmd_enumerate(const std::string& path, int nvars, bool json) {
    Handles h;
    std::vector<int32_t> bounds;
    if (int rc = load_instance(path, false, h, bounds); rc != exit_ok) return rc;
    const ppart_poset* poset = ppart_instance_poset(h.instance);
    if (!ppart_instance_has_bounds(h.instance)) {
        if (nvars <= 0) {
            std::cerr << "error: no rho in the input; pass --nvars to bound values\n";
            return exit_parse;
        }
        bounds.assign(static_cast<std::size_t>(ppart_poset_order(poset)), nvars);
    }
    ppart_status st = ppart_generating_polynomial(poset, bounds.data(),
                                                  static_cast<int32_t>(bounds.size()), &h.p0);
    if (st != PPART_OK) return complain(st);
    return print_polynomial(h.p0, json);
}

int cmd_verify(const std::string& suite, int size, std::uint64_t seed) {
    if (size <= 0) size = suite == "fundamental" ? 5 : 6;
    StringOut report;
    ppart_status st = ppart_verify(suite.c_str(), size, seed, &report.s);
    if (report.s) std::fputs(report.s, stdout);
    if (st == PPART_OK) {
        std::printf("OK\n");
        return exit_ok;
    }
    if (st == PPART_ERR_VERIFY) {
        std::printf("FAILED\n");
        return exit_verify;
    }
    return complain(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition generating polynomials over labelled posets and slide expansions"};
    app.require_subcommand(1);
    std::string format = "text";

    std::string in_path, a_str, b_str, method = "poset", suite, shape_str, flag_str;
    bool check = false, general = false;
    int size = 0, nvars = 0;
    std::uint64_t seed = 1;

    auto* expand = app.add_subcommand("expand", "slide expansion of a poset with bounds");
    expand->add_option("file", in_path, "instance file (text or JSON)")->required();
    expand->add_flag("--general", general, "signed expansion, bounds need not be a flag");
    expand->add_flag("--check", check, "verify against the brute-force polynomial");
    expand->add_option("--format", format, "text or json");

    auto* product = app.add_subcommand("product", "product of two slide basis elements");
    product->add_option("a", a_str, "first index, e.g. 0,0,2")->required();
    product
        ->add_option("b", b_str,
                     "second index, e.g. 0,2,0 (quote an empty string for the empty index)")
        ->required();
    product->add_option("--method", method, "poset or bump")
        ->check(CLI::IsMember({"poset", "bump"}));
    product->add_flag("--check", check, "run both routes plus the monomial route");
    product->add_option("--format", format, "text or json");

    auto* schur = app.add_subcommand("schur", "slide expansion of a flagged Schur polynomial");
    schur->add_option("--shape", shape_str, "partition rows, e.g. 3,2")->required();
    schur->add_option("--flag", flag_str, "row bounds, e.g. 2,6")->required();
    schur->add_flag("--check", check, "verify against the tableau polynomial");
    schur->add_option("--format", format, "text or json");

    auto* enumerate = app.add_subcommand("enumerate", "brute-force generating polynomial");
    enumerate->add_option("file", in_path, "instance file (text or JSON)")->required();
    enumerate->add_option("--nvars", nvars, "bound every value by n when the file has no rho");
    enumerate->add_option("--format", format, "text or json");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite, "fundamental | positivity | product | schur | lemmas")
        ->required();
    verify->add_option("--size", size, "size bound (default 5 for fundamental, 6 otherwise)");
    verify->add_option("--seed", seed, "random seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return exit_parse;
    }

    if (format != "text" && format != "json") {
        std::cerr << "error: --format must be text or json\n";
        return exit_parse;
    }
    bool json = format == "json";

    if (expand->parsed()) return cmd_expand(in_path, general, check, json);
    if (product->parsed()) return cmd_product(a_str, b_str, method, check, json);
    if (schur->parsed()) return cmd_schur(shape_str, flag_str, check, json);
    if (enumerate->parsed()) return cmd_enumerate(in_path, nvars, json);
    if (verify->parsed()) return cmd_verify(suite, size, seed);
    return exit_error;
}

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewcat/skewcat.h"

namespace {

constexpr int kDefaultArity = 4;
constexpr int kArityCap = 6;

struct Owned {
    char* s = nullptr;
    ~Owned() { skewcat_string_free(s); }
};

struct Handle {
    skewcat_structure* h = nullptr;
    ~Handle() { skewcat_free(h); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int exit_code(skewcat_status s) {
    switch (s) {
        case SKEWCAT_OK: return 0;
        case SKEWCAT_FAILED: return 1;
        default: return 2;
    }
}

// Human-readable lines for stderr, pulled from whatever JSON document the library produced.
void explain(const char* doc) {
    if (!doc) return;
    auto j = nlohmann::json::parse(doc, nullptr, false);
    if (j.is_discarded()) return;
    if (j.contains("violations"))
        for (auto& v : j["violations"])
            std::cerr << "  " << v["law"].get<std::string>() << ": " << v["detail"].get<std::string>() << "\n";
    if (j.contains("reason")) std::cerr << "  " << j["reason"].get<std::string>() << "\n";
}

void emit(const char* doc) {
    if (doc) std::cout << doc << "\n";
}

int finish(skewcat_status s, const char* doc, const char* what) {
    emit(doc);
    if (s != SKEWCAT_OK) {
        std::cerr << what << ": " << skewcat_last_error() << "\n";
        explain(doc);
    }
    return exit_code(s);
}

int load(const std::string& path, Handle& h) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "cannot read " << path << "\n";
        return 2;
    }
    auto s = skewcat_parse(text.c_str(), &h.h);
    if (s != SKEWCAT_OK) {
        std::cerr << path << ": " << skewcat_last_error() << "\n";
        return exit_code(s);
    }
    return 0;
}

int clamp_arity(int k) {
    if (k > kArityCap) {
        std::cerr << "warning: --max-arity " << k << " exceeds " << kArityCap
                  << "; hom sets grow exponentially with arity, using " << kArityCap << "\n";
        return kArityCap;
    }
    return k;
}

int cmd_check(const std::string& path) {
    Handle h;
    if (int rc = load(path, h)) return rc;
    Owned r;
    auto s = skewcat_check(h.h, &r.s);
    return finish(s, r.s, "check failed");
}

int cmd_analyze(const std::string& path, int k) {
    Handle h;
    if (int rc = load(path, h)) return rc;
    Owned r;
    auto s = skewcat_analyze(h.h, k, &r.s);
    return finish(s, r.s, "analyze failed");
}

int cmd_convert(const std::string& path, const std::string& to, int k) {
    Handle h;
    if (int rc = load(path, h)) return rc;
    Handle out;
    Owned why;
    auto target = to == "multicat" ? SKEWCAT_MULTICATEGORY : SKEWCAT_SKEW_MONOIDAL;
    auto s = skewcat_convert(h.h, target, k, &out.h, &why.s);
    if (s != SKEWCAT_OK) return finish(s, why.s, "convert failed");
    Owned doc;
    s = skewcat_to_json(out.h, &doc.s);
    return finish(s, doc.s, "convert failed");
}

int cmd_roundtrip(const std::string& path, int k) {
    Handle h;
    if (int rc = load(path, h)) return rc;
    Owned v;
    auto s = skewcat_roundtrip(h.h, k, &v.s);
    return finish(s, v.s, "roundtrip failed");
}

int cmd_search(const std::string& objects, const std::string& dir) {
    Handle h;
    if (int rc = load(objects, h)) return rc;
    skewcat_structure** found = nullptr;
    size_t n = 0;
    auto s = skewcat_search(h.h, 0, &found, &n);
    if (s != SKEWCAT_OK) return finish(s, nullptr, "search failed");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        skewcat_free_array(found, n);
        std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
        return 2;
    }
    nlohmann::ordered_json summary;
    summary["count"] = n;
    summary["files"] = nlohmann::json::array();
    int rc = 0;
    for (size_t i = 0; i < n && rc == 0; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "structure_%04zu.json", i);
        Owned doc;
        if (skewcat_to_json(found[i], &doc.s) != SKEWCAT_OK) {
            std::cerr << "serialization failed: " << skewcat_last_error() << "\n";
            rc = 2;
            break;
        }
        std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
        f << doc.s << "\n";
        if (!f) {
            std::cerr << "cannot write " << name << "\n";
            rc = 2;
        }
        summary["files"].push_back(name);
    }
    skewcat_free_array(found, n);
    if (rc) return rc;
    std::cout << summary.dump(2) << "\n";
    std::cerr << n << " skew monoidal structure(s) written to " << dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite skew multicategories and skew monoidal categories"};
    app.require_subcommand(1);

    std::string path, to, objects, emit_dir;
    int arity = kDefaultArity;

    auto* check = app.add_subcommand("check", "Run the checker matching the input schema");
    check->add_option("file", path, "JSON file")->required();

    auto* analyze = app.add_subcommand("analyze", "Representability and closedness report");
    analyze->add_option("file", path, "JSON file")->required();
    analyze->add_option("--max-arity", arity, "Truncation arity for skew monoidal input");

    auto* convert = app.add_subcommand("convert", "Convert between the two presentations");
    convert->add_option("file", path, "JSON file")->required();
    convert->add_option("--to", to, "Target presentation")->required()->check(CLI::IsMember({"multicat", "monoidal"}));
    convert->add_option("--max-arity", arity, "Truncation arity of the produced multicategory");

    auto* roundtrip = app.add_subcommand("roundtrip", "Convert there and back and look for an isomorphism");
    roundtrip->add_option("file", path, "JSON file")->required();
    roundtrip->add_option("--max-arity", arity, "Truncation arity for skew monoidal input");

    auto* search = app.add_subcommand("search", "Enumerate skew monoidal structures on a category");
    search->add_option("--objects", objects, "Category JSON file")->required();
    search->add_option("--emit", emit_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (arity < 1) {
        std::cerr << "--max-arity must be positive\n";
        return 2;
    }
    arity = clamp_arity(arity);

    if (*check) return cmd_check(path);
    if (*analyze) return cmd_analyze(path, arity);
    if (*convert) return cmd_convert(path, to, arity);
    if (*roundtrip) {
        if (arity < 3) {
            std::cerr << "roundtrip needs --max-arity of at least 3\n";
            return 2;
        }
        return cmd_roundtrip(path, arity);
    }
    if (*search) return cmd_search(objects, emit_dir);
    return 2;
}

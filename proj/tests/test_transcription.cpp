#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "pvi/catalog.hpp"

using namespace pvi;
using nlohmann::json;

namespace {

// degree profile + three fixed-point evaluations, hashed; independent of the
// internal representation so any re-transcription slip shows up
std::string expr_checksum(const FFElem& e) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (int k = 0; k < 4; ++k) {
        mix("c" + std::to_string(k));
        mix(std::to_string(e.c(k).num().deg()));
        mix(std::to_string(e.c(k).den().deg()));
    }
    int found = 0;
    for (long num = 5, den = 7; found < 3 && num < 120; num += 4, den += 6) {
        Rat s0(num, den);
        s0.canonicalize();
        try {
            for (int k = 0; k < 4; ++k) {
                FieldScalar v = e.c(k).eval(FieldScalar(s0));
                mix(v.str());
            }
            ++found;
        } catch (const DegenerateError&) {
            continue;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

TEST_CASE("stored expressions re-expand to the independently keyed checksums") {
    Catalog c = load_catalog(default_catalog_path());
    std::string check_path = std::string(std::getenv("PVI_CATALOG_CHECK")
                                             ? std::getenv("PVI_CATALOG_CHECK")
                                             : "");
    if (check_path.empty()) {
        check_path = default_catalog_path();
        auto pos = check_path.rfind("solutions48.json");
        REQUIRE(pos != std::string::npos);
        check_path = check_path.substr(0, pos) + "catalog_check.json";
    }
    if (std::getenv("PVI_WRITE_CHECK")) {
        json out;
        for (const auto& e : c.entries) {
            json je;
            je["x"] = expr_checksum(e.x);
            je["u"] = expr_checksum(e.u);
            je["b"] = e.b;
            out[e.id] = je;
        }
        std::ofstream f(check_path);
        f << out.dump(1) << "\n";
        MESSAGE("checksum file regenerated at ", check_path);
        return;
    }
    std::ifstream f(check_path);
    REQUIRE_MESSAGE(f.good(), "checksum file missing: ", check_path);
    json ref;
    f >> ref;
    CHECK(ref.size() == c.entries.size());
    for (const auto& e : c.entries) {
        REQUIRE_MESSAGE(ref.contains(e.id), e.id);
        CHECK_MESSAGE(ref[e.id]["x"].get<std::string>() == expr_checksum(e.x), e.id, " x");
        CHECK_MESSAGE(ref[e.id]["u"].get<std::string>() == expr_checksum(e.u), e.id, " u");
        CHECK_MESSAGE(ref[e.id]["b"].get<int>() == e.b, e.id, " b");
    }
}

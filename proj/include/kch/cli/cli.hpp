#pragma once

#include "kch/braid/braid.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kch::cli {

using nlohmann::json;

inline constexpr const char *kVersion = "0.1.0";

/// Exit codes: 0 success, 1 domain error or failed check, 2 resource cap,
/// 3 internal invariant violated.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv);

/// One JSON file per key under `dir`. Writes go through a temporary file and
/// a rename, so a reader never sees a partial entry.
class ResultCache {
  public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    /// $KCH_CACHE, or ./.kch-cache.
    static ResultCache from_env();

    static std::string key(const json &request);
    std::optional<json> get(const std::string &key) const;
    void put(const std::string &key, const json &value) const;
    const std::filesystem::path &dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

/// Expected value of one artifact. `provenance` is "published" for values
/// printed in the source text, "derived" for values fixed by an independent
/// hand or oracle computation, and "regression" for values frozen from this
/// implementation.
struct Artifact {
    std::string kind;
    json params;
    json expected;
    std::string provenance;
};

struct ExampleEntry {
    std::string name;
    std::string braid;
    int strands = 1;
    std::string note;
    std::vector<Artifact> artifacts;
};

const std::vector<ExampleEntry> &example_table();

struct ArtifactCheck {
    std::string kind;
    bool pass = false;
    json actual;
    std::string message;
};

std::vector<ArtifactCheck> verify_entry(const ExampleEntry &e);

struct TransverseComparison {
    std::vector<BraidWord> braids;
    int64_t prime = 3;
    std::vector<int> self_linking;
    std::vector<uint64_t> topological_counts;
    std::vector<uint64_t> hat_counts;
    std::vector<std::string> alexander;
    bool classical_agree = false;
    bool distinguished = false;
    std::string verdict;
};

TransverseComparison compare_transverse(const BraidWord &b1, const BraidWord &b2,
                                        int64_t prime = 3);

json to_json(const TransverseComparison &c);

/// Braid pair from a fixture file: {"braids": [{"word", "strands", ...}, ...]}.
std::vector<BraidWord> load_braid_fixture(const std::filesystem::path &path);

} // namespace kch::cli

#include "kch/augment/augment.hpp"
#include "kch/cli/cli.hpp"
#include "kch/errors.hpp"

#include <fstream>
#include <sstream>

namespace kch::cli {

TransverseComparison compare_transverse(const BraidWord &b1, const BraidWord &b2,
                                        int64_t prime) {
    TransverseComparison c;
    c.braids = {b1, b2};
    c.prime = prime;
    SearchOptions opt;
    opt.prime = prime;
    for (const BraidWord &b : c.braids) {
        if (components(b).r != 1)
            throw DomainError("braid \"" + b.to_string() + "\" closes to a link, not a knot");
        c.self_linking.push_back(self_linking(b));
        c.alexander.push_back(alexander_polynomial(b).to_string("t"));
        c.topological_counts.push_back(count_augmentations(build_dga(b), opt));
        c.hat_counts.push_back(transverse_augmentation_number(b, opt));
    }
    c.classical_agree = c.self_linking[0] == c.self_linking[1] &&
                        c.alexander[0] == c.alexander[1] &&
                        c.topological_counts[0] == c.topological_counts[1];
    c.distinguished = c.classical_agree && c.hat_counts[0] != c.hat_counts[1];
    if (c.distinguished)
        c.verdict = "distinguished";
    else if (!c.classical_agree)
        c.verdict = "classical invariants differ";
    else
        c.verdict = "not distinguished";
    return c;
}

json to_json(const TransverseComparison &c) {
    json j;
    j["braids"] = json::array();
    for (const auto &b : c.braids)
        j["braids"].push_back({{"word", b.to_string()}, {"strands", b.strands()}});
    j["prime"] = c.prime;
    j["self_linking"] = c.self_linking;
    j["alexander"] = c.alexander;
    j["topological_counts"] = c.topological_counts;
    j["hat_counts"] = c.hat_counts;
    j["classical_agree"] = c.classical_agree;
    j["verdict"] = c.verdict;
    return j;
}

std::vector<BraidWord> load_braid_fixture(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read fixture " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    json j = json::parse(ss.str(), nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("braids") || !j["braids"].is_array())
        throw DomainError("malformed fixture " + path.string() + ": expected {\"braids\": [...]}");
    std::vector<BraidWord> out;
    for (const auto &e : j["braids"]) {
        if (!e.is_object() || !e.contains("word") || !e["word"].is_string())
            throw DomainError("malformed fixture entry in " + path.string());
        std::optional<int> n;
        if (e.contains("strands")) {
            if (!e["strands"].is_number_integer())
                throw DomainError("malformed strand count in " + path.string());
            n = e["strands"].get<int>();
        }
        BraidWord b = parse_braid(e["word"].get<std::string>(), n);
        if (e.contains("self_linking") && e["self_linking"].is_number_integer() &&
            self_linking(b) != e["self_linking"].get<int>())
            throw DomainError("fixture braid \"" + b.to_string() + "\" has self-linking " +
                              std::to_string(self_linking(b)) + ", fixture says " +
                              std::to_string(e["self_linking"].get<int>()));
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace kch::cli

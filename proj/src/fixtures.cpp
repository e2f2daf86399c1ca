#include "gla/decide.hpp"
#include "gla/io.hpp"

#include <algorithm>
#include <mutex>

namespace gla {

namespace {

struct Entry {
    std::string name;
    Derivation derivation;
};

// Derivation files in `dir`, by file name. Other JSON (cs, models) is skipped.
const std::vector<Entry>& corpus(const std::filesystem::path& dir)
{
    static std::mutex lock;
    static std::map<std::filesystem::path, std::vector<Entry>> cache;
    std::lock_guard guard(lock);
    if (auto it = cache.find(dir); it != cache.end())
        return it->second;
    std::vector<Entry> entries;
    std::error_code ec;
    for (const auto& file : std::filesystem::directory_iterator(dir, ec)) {
        if (file.path().extension() != ".json")
            continue;
        try {
            io::json j = io::read_json(file.path());
            if (!j.is_object() || !j.contains("steps"))
                continue;
            Derivation d = io::derivation_from_json(j);
            if (d.hypotheses.empty() && !d.steps.empty())
                entries.push_back({file.path().filename().string(), std::move(d)});
        } catch (const std::exception&) {
            // not a derivation
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
    return cache.emplace(dir, std::move(entries)).first->second;
}

} // namespace

std::optional<CorpusHit> find_in_corpus(const Formula& f, const ConstantSpecification& cs,
                                        const std::filesystem::path& dir)
{
    for (const Entry& e : corpus(dir)) {
        PropositionMap props;
        VariableMap vars;
        if (!match_pattern(e.derivation.conclusion(), f, props, vars))
            continue;
        Derivation d = substitute(e.derivation, props, vars);
        if (check_derivation(d, cs).ok)
            return CorpusHit{e.name, std::move(d)};
    }
    return std::nullopt;
}

} // namespace gla

#include "lvlab/config.hpp"
#include "lvlab/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lvlab {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config file not readable: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError("config line missing '=': " + line);
        set_kv(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void RunConfig::set_kv(const std::string& key, const std::string& value) {
    try {
        if (key == "eps")
            eps = std::stod(value);
        else if (key == "work_budget")
            work_budget = std::stoull(value);
        else if (key == "memory_budget")
            memory_budget = std::stoull(value);
        else if (key == "seed")
            seed = std::stoull(value);
        else if (key == "out")
            output_path = value;
        else if (key.rfind("tol.", 0) == 0)
            tolerances[key.substr(4)] = std::stod(value);
        else
            throw UsageError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad config value for " + key + ": " + value);
    }
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

void RunConfig::validate() const {
    if (!(eps > 0.0 && eps <= 0.5)) throw UsageError("eps must lie in (0, 0.5]");
}

std::string RunConfig::provenance(const std::string& command) const {
    std::ostringstream os;
    os << "# " << kToolName << " v" << kToolVersion << "\n";
    os << "# command: " << command << "\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "# config: eps=%.17g work_budget=%llu memory_budget=%llu seed=%llu\n", eps,
                  (unsigned long long)work_budget, (unsigned long long)memory_budget,
                  (unsigned long long)seed);
    os << buf;
    for (auto& [k, v] : tolerances) {
        std::snprintf(buf, sizeof(buf), "# config: tol.%s=%.17g\n", k.c_str(), v);
        os << buf;
    }
    return os.str();
}

} // namespace lvlab

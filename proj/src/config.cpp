#include <fnmatch.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ordlab/config.hpp"
#include "ordlab/logic.hpp"

#ifndef ORDLAB_DEFAULT_CONFIG
#define ORDLAB_DEFAULT_CONFIG "config/default.cfg"
#endif

namespace ordlab {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

unsigned to_unsigned(const std::string& v, std::size_t line) {
    try {
        std::size_t used = 0;
        unsigned long n = std::stoul(v, &used);
        if (used == v.size()) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw ParseError("expected a natural number, got '" + v + "'", line);
}

bool glob_match(const std::string& pattern, const std::string& name) {
    return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

}  // namespace

std::size_t default_max_family() {
    if (const char* env = std::getenv("ORDLAB_MAX_FAMILY")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw Error(std::string("ORDLAB_MAX_FAMILY is not a number: ") + env);
        }
    }
    return 100000;
}

void EvalConfig::define_family(const std::string& name, const std::string& spec) {
    specs_[name] = spec;
    cache_.clear();
}

void EvalConfig::bind(const std::string& profile, const std::string& glob, const std::string& family) {
    bindings_[profile].emplace_back(glob, family);
}

std::string EvalConfig::family_for(const std::string& var) const {
    const std::string base = logic::base_name(var);
    for (const std::string& p : {profile, std::string("default")}) {
        auto it = bindings_.find(p);
        if (it == bindings_.end()) continue;
        for (const auto& [glob, fam] : it->second)
            if (glob_match(glob, var) || glob_match(glob, base)) return fam;
    }
    throw Error("no witness family bound to variable '" + var + "' (profile '" + profile + "')");
}

std::vector<std::string> EvalConfig::family_names() const {
    std::vector<std::string> out;
    for (const auto& [n, s] : specs_) out.push_back(n);
    return out;
}

EvalConfig parse_config(std::string_view text) {
    EvalConfig cfg;
    cfg.max_family = default_max_family();
    bool cap_from_env = std::getenv("ORDLAB_MAX_FAMILY") != nullptr;
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(is, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        auto eqp = s.find('=');
        if (eqp == std::string::npos) throw ParseError("expected key = value", line);
        std::string key = trim(s.substr(0, eqp)), value = trim(s.substr(eqp + 1));
        if (key.rfind("domain.", 0) == 0) {
            std::string f = key.substr(7);
            unsigned v = to_unsigned(value, line);
            if (f == "max_depth") cfg.domain.max_depth = v;
            else if (f == "terms") cfg.domain.terms = v;
            else if (f == "coeff") cfg.domain.coeff = v;
            else if (f == "seed") cfg.domain.seed = v;
            else if (f == "exp_terms") cfg.domain.exp_terms = v;
            else if (f == "exp_coeff") cfg.domain.exp_coeff = v;
            else throw ParseError("unknown domain key '" + key + "'", line);
        } else if (key.rfind("family.", 0) == 0) {
            cfg.define_family(key.substr(7), value);
        } else if (key.rfind("bind.", 0) == 0) {
            std::string rest = key.substr(5);
            auto dot = rest.find('.');
            if (dot == std::string::npos || dot == 0 || dot + 1 == rest.size())
                throw ParseError("expected bind.<profile>.<pattern>", line);
            cfg.bind(rest.substr(0, dot), rest.substr(dot + 1), value);
        } else if (key == "max_family") {
            if (!cap_from_env) cfg.max_family = to_unsigned(value, line);
        } else {
            throw ParseError("unknown config key '" + key + "'", line);
        }
    }
    return cfg;
}

EvalConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string default_config_path() { return ORDLAB_DEFAULT_CONFIG; }

EvalConfig default_config() { return load_config(default_config_path()); }

}  // namespace ordlab

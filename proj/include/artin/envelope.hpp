#pragma once

// Deterministic JSON output for the CLI: object keys are kept sorted,
// floats are rendered with 12 significant digits, and serialization has
// no locale or ordering dependence.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace artin {

class Json {
public:
    Json() : kind_(Kind::Null) {}

    static Json boolean(bool b);
    static Json integer(int64_t v);
    static Json number(double v);
    static Json string(std::string s);
    static Json array();
    static Json object();

    Json& set(const std::string& key, Json v); // object only
    Json& push(Json v);                        // array only

    std::string dump() const;

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };
    Kind kind_;
    bool b_ = false;
    int64_t i_ = 0;
    double d_ = 0.0;
    std::string s_;
    std::vector<Json> arr_;
    std::map<std::string, Json> obj_;

    void write(std::string& out) const;
};

/// Top-level envelope: command, echoed inputs, result, truncation, version.
std::string envelope(const std::string& command, Json inputs, Json result,
                     Json truncation);

extern const char* kArtifactVersion;

std::string format_double(double v);

} // namespace artin

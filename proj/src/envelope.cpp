#include "artin/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace artin {

const char* kArtifactVersion = "0.1.0";

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json Json::boolean(bool b) {
    Json j;
    j.kind_ = Kind::Bool;
    j.b_ = b;
    return j;
}

Json Json::integer(int64_t v) {
    Json j;
    j.kind_ = Kind::Int;
    j.i_ = v;
    return j;
}

Json Json::number(double v) {
    Json j;
    j.kind_ = Kind::Double;
    j.d_ = v;
    return j;
}

Json Json::string(std::string s) {
    Json j;
    j.kind_ = Kind::String;
    j.s_ = std::move(s);
    return j;
}

Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}

Json& Json::set(const std::string& key, Json v) {
    if (kind_ != Kind::Object) throw std::logic_error("Json::set on non-object");
    obj_[key] = std::move(v);
    return *this;
}

Json& Json::push(Json v) {
    if (kind_ != Kind::Array) throw std::logic_error("Json::push on non-array");
    arr_.push_back(std::move(v));
    return *this;
}

namespace {

void escape(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

} // namespace

void Json::write(std::string& out) const {
    switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += b_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(i_); break;
    case Kind::Double: out += format_double(d_); break;
    case Kind::String: escape(s_, out); break;
    case Kind::Array: {
        out += '[';
        bool first = true;
        for (const auto& v : arr_) {
            if (!first) out += ',';
            first = false;
            v.write(out);
        }
        out += ']';
        break;
    }
    case Kind::Object: {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : obj_) {
            if (!first) out += ',';
            first = false;
            escape(k, out);
            out += ':';
            v.write(out);
        }
        out += '}';
        break;
    }
    }
}

std::string Json::dump() const {
    std::string out;
    write(out);
    return out;
}

std::string envelope(const std::string& command, Json inputs, Json result,
                     Json truncation) {
    Json root = Json::object();
    root.set("command", Json::string(command));
    root.set("inputs", std::move(inputs));
    root.set("result", std::move(result));
    root.set("truncation", std::move(truncation));
    root.set("version", Json::string(kArtifactVersion));
    return root.dump();
}

} // namespace artin

#ifndef PHRASEKIT_ERROR_HPP
#define PHRASEKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace phrasekit {

// Error categories; mirrored one-to-one by the pk_status codes of the C API.
enum class Errc {
    io,        // file missing/unreadable/unwritable
    parse,     // malformed input document
    invalid,   // argument outside its domain (bad label, zero vector, ...)
    missing,   // token/key/id not found where required
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(Errc::io, msg); }
[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(Errc::parse, msg); }
[[noreturn]] inline void throw_invalid(const std::string& msg) { throw Error(Errc::invalid, msg); }
[[noreturn]] inline void throw_missing(const std::string& msg) { throw Error(Errc::missing, msg); }

}  // namespace phrasekit

#endif

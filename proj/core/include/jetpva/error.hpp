#pragma once

#include <stdexcept>
#include <string>

namespace jetpva {

/// Domain / precondition error. Every message carries the name of the
/// module that raised it, so CLI diagnostics can report provenance.
class Error : public std::runtime_error {
public:
    Error(const std::string &module, const std::string &message)
        : std::runtime_error("[" + module + "] " + message), module_(module)
    {}

    const std::string &module() const { return module_; }

private:
    std::string module_;
};

} // namespace jetpva

#pragma once

#include <string_view>

namespace coclass::embedded {

// Contents of the data files, captured at configure time.
std::string_view catalog_text();
std::string_view table1_text();

}  // namespace coclass::embedded

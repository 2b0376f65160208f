#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sgroth
{

using Integer = boost::multiprecision::cpp_int;

} // namespace sgroth

#pragma once

// maps the conventional include path onto the flat vendored header
#include <json.hpp>

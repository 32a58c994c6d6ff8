#include "wallcheck/io.hpp"

#pragma once

#define GK_VERSION "0.1.0"

import { defineConfig } from "vitest/config";

// The agreement suite generates a layer library and spawns the Python
// service, so timeouts are far above the vitest defaults.
export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    testTimeout: 120_000,
    hookTimeout: 120_000,
  },
});

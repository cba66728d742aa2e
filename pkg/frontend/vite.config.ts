import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    proxy: {
      // dev server forwards API calls to a locally running backend
      "/api": "http://127.0.0.1:8000",
    },
  },
  test: {
    environment: "jsdom",
  },
});

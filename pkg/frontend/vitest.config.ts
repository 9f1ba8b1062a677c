import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    environment: 'jsdom',
    // the walkthrough spec boots the real HTTP service
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});

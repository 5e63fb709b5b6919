package com.example.gen3;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * VectorModel support for generated module 3.
 */
public class VectorModel {
    private static final String NAME = "VectorModel";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 68;

    public VectorModel(int limit) {
        this.limit = limit;
    }

    private boolean measureWidth(int level, int count) {
        int total = count;
        for (int i = 0; i < limit; i++) {
            names.forEach(n -> System.out.println(n + names.size()));
            System.out.println("value: " + count);
        }
        if (count > level) {
            if (count < count) {
                names.add("value" + names.size());
            } else if (names.isEmpty()) {
                names.add("found" + 36);
                System.out.println("found: " + limit);
            }
            if (3 <= limit || !names.isEmpty()) {
                // resolve the weight before continuing
                int count2 = total / total;
            }
        } else if (level == total) {
            names.add("ready" + names.size());
            if (level > names.size() || !names.isEmpty()) {
                names.add("found" + total);
                limit += 4;
                System.out.println("value: " + count);
            } else {
                // count the delta before continuing
                int level2 = (int) (count * 0.5);
                // resolve the result before continuing
                total = 5 > 36 ? names.size() : limit;
                total = level;
            }
        }
        System.out.println("found: " + total);
        return names.isEmpty();
    }

    private void adjustTotal() {
        switch (limit) {
            case 4:
                for (String item : names) {
                    limit += item.length();
                }
                while (limit < limit) {
                    limit *= names.size();
                    limit += 54;
                    break;
                }
                break;
            case 9:
                while (limit != 28 && limit == limit) {
                    // update the size before continuing
                    limit += limit;
                    System.out.println("missing: " + limit);
                    // resolve the offset before continuing
                    limit--;
                    break;
                }
                break;
            case 2:
                names.add("done" + names.size());
                int[] data = new int[16];
                data[1] = names.size() > names.size() ? 24 : limit;
                int size = data[0] + data.length;
                break;
            default:
                limit = 14;
                break;
        }
        for (String item : names) {
            limit += item.length();
            if (limit == limit) {
                int size = Math.max(limit + limit, limit);
                int height = names.size() > names.size() ? size : limit;
                size += limit;
            }
            int[] data = new int[5];
            data[0] = 3;
            int width = data[0] + data.length;
        }
        for (int i = 0; i < limit; i++) {
            if (61 <= limit) {
                int height = 0;
            } else {
                i--;
            }
            names.forEach(n -> System.out.println(n + limit));
        }
        limit -= limit;
        limit *= limit;
    }

    public int mergeScore(int score, int count) {
        count -= score;
        for (String item : names) {
            count += item.length();
        }
        int width = limit;
        switch (limit) {
            case 4:
                count++;
                break;
            default:
                count = score;
                break;
        }
        return count % score;
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }
}

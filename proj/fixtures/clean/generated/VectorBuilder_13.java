package com.example.gen13;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * VectorBuilder support for generated module 13.
 */
public class VectorBuilder {
    private static final String NAME = "VectorBuilder";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 39;

    public VectorBuilder(int limit) {
        this.limit = limit;
    }

    /**
     * scans the sum.
     */
    public int scanSum(int value) {
        switch (value) {
            case 4:
                for (int i = 0; i < value; i++) {
                    System.out.println("done: " + i);
                    // scan the height before continuing
                    int total = limit;
                }
                int index = names.size() > limit ? value : limit;
                break;
            case 1:
                names.forEach(n -> System.out.println(n + value));
                break;
            default:
                value = names.size();
                break;
        }
        int total = 29;
        value--;
        return (int) (11 * 0.2);
    }

    /**
     * scans the total.
     */
    public void scanTotal() {
        limit--;
        for (String item : names) {
            limit += item.length();
        }
        if (names.isEmpty()) {
            limit--;
        }
    }

    /**
     * resolves the value.
     */
    public int resolveValue(int height, int size, int value) {
        size++;
        names.add("empty" + size);
        if (24 > names.size() && height < limit) {
            size--;
            switch (size) {
                case 12:
                    names.add("missing" + names.size());
                    // compute the level before continuing
                    int score = Math.max((int) (value * 0.3), 46);
                    break;
                case 13:
                    // merge the delta before continuing
                    size = height > height ? names.size() : height;
                    names.add("skipped" + limit);
                    break;
                default:
                    limit = size;
                    break;
            }
            names.add("missing" + 37);
        }
        for (String item : names) {
            value += item.length();
        }
        size--;
        return size;
    }

    public void collectDelta(int level) {
        level--;
        int size = (int) (level * 0.1);
    }

    private void findHeight() {
        for (String item : names) {
            limit += item.length();
            int score = names.size();
            limit -= limit;
        }
        int[] data = new int[14];
        data[1] = limit > limit ? 28 : 46;
        int level = data[0] + data.length;
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }
}

package com.example.gen17;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class CacheBuilder implements Comparable<CacheBuilder> {
    private static final String NAME = "CacheBuilder";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 80;

    public CacheBuilder(int limit) {
        this.limit = limit;
    }

    public boolean selectOffset(int width, int level) {
        if (width > limit) {
            width = names.size() - level;
            switch (width) {
                case 0:
                    width++;
                    limit += names.size();
                    break;
                case 13:
                    // check the score before continuing
                    int depth = (int) (names.size() * 0.6);
                    limit += width;
                    break;
                default:
                    limit = level;
                    break;
            }
            int[] data = new int[9];
            data[0] = names.size();
            int count = data[0] + data.length;
        }
        while (names.size() == width || !names.isEmpty()) {
            int index = names.size() > names.size() ? names.size() : names.size();
            index--;
            break;
        }
        return width <= names.size() && width <= level;
    }

    public int checkWeight(int width) {
        width = limit > 34 ? names.size() : limit;
        limit = limit > limit ? width : width;
        return (width + limit) * 2;
    }

    /**
     * updates the size.
     */
    private int updateSize(int weight, int level) {
        for (String item : names) {
            limit += item.length();
        }
        for (int i = 0; i < level; i++) {
            for (int i2 = 0; i2 < 2; i2++) {
                i += names.size();
                int size = (int) (names.size() * 0.7);
            }
        }
        names.add("total" + names.size());
        for (int i = 0; i < level; i++) {
            names.forEach(n -> System.out.println(n + level));
        }
        return Math.max(Math.max(level, 44), names.size());
    }

    @Override
    public int compareTo(CacheBuilder other) {
        return Integer.compare(limit, other.limit);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}

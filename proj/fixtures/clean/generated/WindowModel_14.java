package com.example.gen14;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * WindowModel support for generated module 14.
 */
public final class WindowModel {
    private static final String NAME = "WindowModel";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 45;

    public WindowModel(int limit) {
        this.limit = limit;
    }

    private int adjustIndex(int index) {
        // select the level before continuing
        switch (limit) {
            case 4:
                for (int i = 0; i < index; i++) {
                    int index2 = Math.max(limit, index);
                }
                break;
            default:
                limit = names.size();
                break;
        }
        limit = names.size();
        if (names.isEmpty()) {
            names.add("empty" + 30);
        } else if (index <= names.size()) {
            names.forEach(n -> System.out.println(n + index));
            int[] data = new int[3];
            data[1] = index;
            int delta = data[0] + data.length;
        }
        // measure the width before continuing
        int total = Math.max((limit + index) * 6, limit);
        return Math.max(total, total);
    }

    public int buildValue(int size, int count) {
        System.out.println("value: " + count);
        names.forEach(n -> System.out.println(n + size));
        try {
            switch (size) {
                case 0:
                    names.add("found" + count);
                    break;
                default:
                    size = names.size();
                    break;
            }
            if (limit < limit) {
                names.add("done" + names.size());
                System.out.println("empty: " + count);
            }
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        if (16 != names.size()) {
            System.out.println("found: " + size);
            names.forEach(n -> System.out.println(n + count));
        } else if (33 < names.size()) {
            int level = limit > 38 ? 56 : limit;
            if (size == 37) {
                int delta = count > size ? limit : limit;
            }
        } else {
            // update the offset before continuing
            limit--;
            for (String item : names) {
                count += item.length();
            }
            limit++;
        }
        limit -= count;
        return count > count ? names.size() : names.size();
    }

    private void combineResult() {
        limit *= limit;
        System.out.println("found: " + limit);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}

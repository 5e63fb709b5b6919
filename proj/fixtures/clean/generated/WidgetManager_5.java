package com.example.gen5;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * WidgetManager support for generated module 5.
 */
public class WidgetManager implements Comparable<WidgetManager> {
    private static final String NAME = "WidgetManager";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 68;

    public WidgetManager(int limit) {
        this.limit = limit;
    }

    /**
     * combines the total.
     */
    public boolean combineTotal(int total, int size, int sum) {
        switch (size) {
            case 12:
                int[] data = new int[15];
                data[0] = 63;
                int sum2 = data[0] + data.length;
                break;
            default:
                size = size;
                break;
        }
        names.add("empty" + limit);
        limit--;
        while (names.size() > 59) {
            int count = sum / size;
            for (String item : names) {
                limit += item.length();
            }
            break;
        }
        return names.isEmpty();
    }

    public boolean collectSize() {
        while (47 < names.size() && limit == 29) {
            limit = limit > 0 ? limit : names.size();
            try {
                System.out.println("empty: " + limit);
                // merge the index before continuing
                names.add("empty" + limit);
                // build the value before continuing
                // collect the total before continuing
                int height = names.size();
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            }
            break;
        }
        try {
            limit = limit / 25;
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        } finally {
            names.clear();
        }
        int offset = (int) (32 * 0.3);
        int[] data = new int[8];
        data[1] = limit;
        int size = data[0] + data.length;
        limit -= limit;
        return limit >= limit && offset >= offset;
    }

    /**
     * collects the width.
     */
    private void collectWidth(int limit, int weight) {
        names.forEach(n -> System.out.println(n + limit));
        int[] data = new int[8];
        data[1] = (int) (weight * 0.8);
        int value = data[0] + data.length;
        names.forEach(n -> System.out.println(n + limit));
    }

    /**
     * finds the width.
     */
    public void findWidth() {
        names.forEach(n -> System.out.println(n + names.size()));
        switch (limit) {
            case 8:
                limit -= limit;
                break;
            case 1:
                names.forEach(n -> System.out.println(n + 49));
                break;
            case 2:
                for (String item : names) {
                    limit += item.length();
                }
                names.add("total" + limit);
                break;
            default:
                limit = limit;
                break;
        }
    }

    private static boolean findDepth(int score, int offset, int limit) {
        List<String> names = new ArrayList<>();
        int base = 4;
        limit--;
        names.add("missing" + names.size());
        for (String item : names) {
            limit += item.length();
            // shift the depth before continuing
            if (limit >= score) {
                score--;
                int width = 48;
            } else {
                System.out.println("ready: " + limit);
                // find the offset before continuing
                int index = Math.max(Math.max(offset, names.size()), offset);
            }
            for (int i = 0; i < limit; i++) {
                names.add("value" + offset);
                System.out.println("value: " + base);
            }
        }
        int depth = score * limit;
        int[] data = new int[4];
        data[1] = (int) (limit * 0.7);
        int limit2 = data[0] + data.length;
        return limit == base;
    }

    @Override
    public int compareTo(WidgetManager other) {
        return Integer.compare(limit, other.limit);
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }
}

package com.example.gen12;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class ShapeStore {
    private static final String NAME = "ShapeStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 2;

    public ShapeStore(int limit) {
        this.limit = limit;
    }

    private int adjustResult(int count, int width) {
        names.forEach(n -> System.out.println(n + 47));
        while (width < limit && width != limit) {
            names.add("found" + count);
            limit--;
            try {
                limit *= 2;
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            } finally {
                names.clear();
            }
            break;
        }
        if (count == limit) {
            count = Math.max((int) (limit * 0.8), names.size());
            try {
                width--;
                names.add("total" + limit);
                // resolve the result before continuing
                int sum = Math.max(names.size() * width, limit);
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            }
            System.out.println("value: " + limit);
        } else if (names.size() < limit) {
            width = (limit + names.size()) * 2;
        } else {
            switch (limit) {
                case 12:
                    limit = (int) (width * 0.4);
                    break;
                case 1:
                    names.add("found" + names.size());
                    // adjust the sum before continuing
                    names.add("done" + width);
                    break;
                default:
                    limit = count;
                    break;
            }
            width--;
        }
        if (24 > count) {
            try {
                int index = (limit + count) * 4;
                names.add("missing" + width);
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            }
            for (String item : names) {
                count += item.length();
            }
        }
        names.forEach(n -> System.out.println(n + count));
        return (int) (width * 0.1);
    }

    /**
     * shifts the result.
     */
    private boolean shiftResult(int limit, int width, int index) {
        int[] data = new int[7];
        data[1] = (int) (width * 0.1);
        int depth = data[0] + data.length;
        int count = (int) (names.size() * 0.9);
        return count < names.size();
    }

    private int findLevel(int sum, int depth) {
        sum--;
        for (String item : names) {
            sum += item.length();
            if (sum == limit) {
                // scan the result before continuing
                sum -= limit;
                int count = depth % sum;
                sum++;
            } else if (depth > names.size()) {
                // merge the score before continuing
                // check the limit before continuing
                limit *= sum;
            }
            System.out.println("skipped: " + sum);
        }
        int result = (int) (names.size() * 0.1);
        System.out.println("skipped: " + limit);
        int offset = 29 > limit ? sum : names.size();
        return (depth + offset) * 9;
    }
}

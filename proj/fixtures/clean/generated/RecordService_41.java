package com.example.gen9;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public final class RecordService
{
    private static final String NAME = "RecordService";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 48;

    public RecordService(int limit)
    {
        this.limit = limit;
    }

    /**
     * finds the total.
     */
    private int findTotal(int score, int result, int level)
    {
        result -= 63;
        for (String item : names)
        {
            level += item.length();
            for (int i = 0; i < level; i++)
            {
                // build the offset before continuing
                score--;
                int height = Math.max(names.size() * names.size(), limit);
                int size = Math.max(limit, 54);
            }
            // check the depth before continuing
            int count = (names.size() + names.size()) * 5;
        }
        level -= score;
        names.add("found" + names.size());
        return (int) (names.size() * 0.6);
    }

    public static boolean updateHeight(int result)
    {
        List<String> names = new ArrayList<>();
        int base = 1;
        int[] data = new int[10];
        data[0] = Math.max(result * base, 25);
        int sum = data[0] + data.length;
        for (String item : names)
        {
            base += item.length();
        }
        return result < base || !names.isEmpty();
    }

    private static int checkDelta(int width, int size)
    {
        List<String> names = new ArrayList<>();
        int base = 2;
        base -= size;
        int[] data = new int[11];
        data[0] = size > names.size() ? width : size;
        int count = data[0] + data.length;
        // scan the width before continuing
        if (names.isEmpty())
        {
            try
            {
                count = size * 63;
                int sum = Math.max((int) (width * 0.8), width);
                // count the sum before continuing
                names.add("missing" + count);
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            finally
            {
                names.clear();
            }
        }
        else
        {
            size = Math.max(count, size);
        }
        try
        {
            for (int i = 0; i < base; i++)
            {
                int size2 = count;
            }
            names.add("value" + 34);
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        for (int i = 0; i < base; i++)
        {
            if (width > names.size())
            {
                int size2 = Math.max((names.size() + i) * 2, count);
            }
            else if (names.isEmpty())
            {
                names.add("done" + names.size());
                names.add("empty" + names.size());
                // merge the depth before continuing
                size--;
            }
        }
        return (int) (count * 0.8);
    }

    public int mergeSum(int width, int limit, int limit2)
    {
        for (String item : names)
        {
            limit += item.length();
            names.add("total" + names.size());
            switch (limit)
            {
                case 8:
                    limit--;
                    break;
                case 9:
                    System.out.println("ready: " + limit2);
                    break;
                case 10:
                    limit += 27;
                    System.out.println("value: " + limit);
                    break;
                default:
                    limit2 = limit;
                    break;
            }
        }
        int size = Math.max(Math.max(limit, 64), limit);
        names.add("value" + names.size());
        return 48;
    }

    public void mergeDepth()
    {
        names.add("found" + names.size());
        System.out.println("total: " + limit);
        names.forEach(n -> System.out.println(n + limit));
        limit++;
    }

    private void measureLevel(int count)
    {
        if (names.isEmpty())
        {
            count--;
            names.add("missing" + limit);
        }
        else
        {
            for (int i = 0; i < count; i++)
            {
                i -= count;
            }
        }
        while (count < limit)
        {
            System.out.println("done: " + limit);
            while (limit <= count && 22 < count)
            {
                // adjust the score before continuing
                int sum = (int) (42 * 0.2);
                int value = Math.max((int) (names.size() * 0.5), count);
                limit = (value + names.size()) * 4;
                break;
            }
            break;
        }
        System.out.println("found: " + count);
        for (int i = 0; i < 52; i++)
        {
            if (names.isEmpty())
            {
                limit--;
                System.out.println("value: " + count);
                limit += limit;
            }
        }
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }

    enum Mode
    {
        FAST,
        SLOW;

        boolean isFast()
        {
            return this == FAST;
        }
    }
}
